use postpfa::coin::MembershipBits;
use postpfa::counter::{build_dima3, build_dima3i};
use postpfa::document::{parse, serialize, Automaton, AutomatonDocument};
use postpfa::rational::rat;
use postpfa::verifier::{build_upower, build_upower6i, build_upower_k, build_usquare};
use postpfa::zoo::Family;
use postpfa::Error;

fn generated() -> Vec<Automaton> {
    let x = rat(1, 4);
    let mut v: Vec<Automaton> = [
        Family::Equal,
        Family::EqualBlocks,
        Family::EqualBlocksF { a: 2, b: 1 },
        Family::Log,
    ]
    .into_iter()
    .map(|f| f.build(&x).unwrap().into())
    .collect();
    v.push(build_upower(&rat(1, 2)).unwrap().into());
    v.push(build_upower_k(&rat(1, 2), 2).unwrap().into());
    v.push(build_usquare(&rat(1, 3)).unwrap().into());
    v.push(build_upower6i(&MembershipBits::parse("1").unwrap(), 4).unwrap().into());
    v.push(build_dima3(&x).unwrap().into());
    v.push(build_dima3i(&rat(1, 20), &MembershipBits::parse("01").unwrap(), 4).unwrap().into());
    v
}

#[test]
fn every_generated_automaton_round_trips() {
    for m in generated() {
        let text = serialize(&m);
        let back = parse(&text).unwrap();
        assert_eq!(back, m, "{:?}", m.kind());
        assert_eq!(serialize(&back), text);
    }
}

#[test]
fn shuffled_transitions_serialize_canonically() {
    let m: Automaton = Family::Equal.build(&rat(1, 3)).unwrap().into();
    let mut doc = AutomatonDocument::from_automaton(&m);
    doc.transitions.reverse();
    let m2 = doc.into_automaton().unwrap();
    assert_eq!(serialize(&m2), serialize(&m));
}

#[test]
fn bad_documents() {
    let base = r#"{"kind":"pfa","alphabet":["0"],"states":["s","a","r"],"start":"s","accept":"a","reject":"r","transitions":[TR]}"#;
    let doc = |tr: &str| base.replace("TR", tr);
    let err = parse(&doc(r#"{"from":"s","symbol":"¢","to":"a","p":"2/0"}"#)).unwrap_err();
    assert!(matches!(&err, Error::Parse { location, .. } if location == "transitions[0].p"), "{err}");
    let err = parse(&doc(r#"{"from":"q","symbol":"¢","to":"a","p":"1/1"}"#)).unwrap_err();
    assert!(matches!(&err, Error::Parse { location, .. } if location == "transitions[0].from"), "{err}");
    let err = parse(&doc(r#"{"from":"s","symbol":"x","to":"a","p":"1/1"}"#)).unwrap_err();
    assert!(matches!(&err, Error::Parse { location, .. } if location == "transitions[0].symbol"), "{err}");
    let err = parse(&doc(r#"{"from":"s","symbol":"¢","to":"a","p":"1/1","move":"stay"}"#)).unwrap_err();
    assert!(matches!(&err, Error::Parse { location, .. } if location == "transitions[0].move"), "{err}");
    let err = parse("{\"kind\": \"pfa\",\n \"alphabet\": 3}").unwrap_err();
    assert!(matches!(&err, Error::Parse { location, .. } if location.starts_with("line 2")), "{err}");
    let err = parse(&doc(r#"{"from":"s","symbol":"¢","to":"a","p":"1/2"},{"from":"s","symbol":"¢","to":"r","p":"1/4"}"#)).unwrap_err();
    assert!(matches!(err, Error::MalformedAutomaton(_)));
    assert!(err.to_string().contains("(s, ¢) sums to 3/4"), "{err}");
}
