use gradspec::error::HarnessError;
use gradspec::fixtures::{curated, fixture};
use gradspec::instance::InstanceFile;
use gradspec_core::{module_tables_constructor, tables_constructor, AlgebraError, ComponentSpec, Limits, ModuleConstructor, RingConstructor};

#[test]
fn fixtures_round_trip() {
    for f in curated() {
        let text = f.to_json();
        let back = InstanceFile::parse_str(&text, &f.name).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_json(), text);
        back.validate(&Limits::default()).unwrap();
    }
}

#[test]
fn m_a_and_r_d_load() {
    let m_a = fixture("m_a.json").unwrap().validate(&Limits::default()).unwrap();
    assert_eq!((m_a.ring.size(), m_a.module.as_ref().unwrap().size()), (4, 4));
    let r_d = fixture("r_d.json").unwrap().validate(&Limits::default()).unwrap();
    assert_eq!(r_d.ring.size(), 6);
    assert!(r_d.module.is_none());
}

#[test]
fn table_round_trip_keeps_the_structure() {
    let m_a = fixture("m_a.json").unwrap().validate(&Limits::default()).unwrap();
    let module = m_a.module.as_ref().unwrap();
    let file = InstanceFile {
        name: "M_A-tables".into(),
        group: fixture("m_a.json").unwrap().group,
        ring: tables_constructor(&m_a.ring),
        module: Some(module_tables_constructor(module)),
        notes: None,
    };
    let again = InstanceFile::parse_str(&file.to_json(), "M_A-tables").unwrap().validate(&Limits::default()).unwrap();
    let m2 = again.module.unwrap();
    assert_eq!(m2.size(), module.size());
    assert_eq!(m2.labels(), module.labels());
}

#[test]
fn corrupted_action_is_a_validation_error() {
    let base = fixture("m_a.json").unwrap();
    let m_a = base.validate(&Limits::default()).unwrap();
    let ModuleConstructor::Tables { size, zero, add, mut action, components, labels } =
        module_tables_constructor(m_a.module.as_ref().unwrap())
    else {
        unreachable!()
    };
    // 1 must act as the identity.
    action[1][1] = 0;
    let broken = InstanceFile {
        module: Some(ModuleConstructor::Tables { size, zero, add, action, components, labels }),
        ..base
    };
    match broken.validate(&Limits::default()) {
        Err(HarnessError::Validation { location: "module", error: AlgebraError::NotAModule(_), .. }) => {}
        other => panic!("expected a module validation error, got {other:?}"),
    }
}

#[test]
fn malformed_grading_names_the_component() {
    let base = fixture("r_c.json").unwrap();
    let r_c = base.validate(&Limits::default()).unwrap();
    let RingConstructor::Tables { size, zero, one, add, mul, labels, .. } = tables_constructor(&r_c.ring) else {
        unreachable!()
    };
    let components = vec![
        ComponentSpec { degree: vec![0], elements: vec![0, 1] },
        ComponentSpec { degree: vec![1], elements: vec![0, 1, 2] },
    ];
    let bad = InstanceFile { ring: RingConstructor::Tables { size, zero, one, add, mul, components, labels }, ..base };
    match bad.validate(&Limits::default()) {
        Err(HarnessError::Validation { location: "ring", error: AlgebraError::InvalidGrading { component, .. }, .. }) => {
            assert!(component.contains('1'), "{component}");
        }
        other => panic!("expected a grading error, got {other:?}"),
    }
}

#[test]
fn parse_errors_carry_positions() {
    match InstanceFile::parse_str("{\n  \"name\": 3\n}", "bad.json") {
        Err(HarnessError::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("{other:?}"),
    }
}
