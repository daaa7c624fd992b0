//! Bundled input files and the named scenarios built from them.

use crate::error::Result;
use crate::io::{Parsed, Sources};

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        /// `(file name, contents)` of every bundled fixture.
        pub const FILES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../fixtures/", $name)))),*
        ];
    };
}

bundle!(
    "broken_face.json",
    "circle.json",
    "circle_tau.json",
    "const_z.json",
    "const_z2.json",
    "const_z4.json",
    "negate_z.json",
    "negate_z4.json",
    "reduction_z2.json",
    "refcircle.json",
    "refcircle_bad_tau.json",
    "simplex2.json",
    "sphere2.json",
    "triangle.json",
    "triangle_kappa.json",
    "theory_reduction.json",
    "theory_trivial_psi.json",
    "theory_z2.json",
    "theory_zero.json",
    "theory_zero_delta1.json",
    "z2.json",
);

pub fn file(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// A computation over bundled files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scenario {
    pub name: &'static str,
    pub complex: &'static str,
    pub group: Option<&'static str>,
    pub coeffs: &'static str,
    pub twist: Option<&'static str>,
    pub action: Option<&'static str>,
}

impl Scenario {
    pub fn sources(&self) -> Sources {
        let get = |n: &str| (n.to_string(), file(n).expect("bundled file").to_string());
        Sources {
            complex: get(self.complex),
            group: self.group.map(get),
            coeffs: Some(get(self.coeffs)),
            twist: self.twist.map(get),
            action: self.action.map(get),
        }
    }

    pub fn parsed(&self) -> Result<Parsed> {
        self.sources().parse()
    }
}

const fn plain(name: &'static str, complex: &'static str, coeffs: &'static str) -> Scenario {
    Scenario {
        name,
        complex,
        group: None,
        coeffs,
        twist: None,
        action: None,
    }
}

pub const CIRCLE_Z: Scenario = plain("circle-Z", "circle.json", "const_z.json");
pub const CIRCLE_Z2: Scenario = plain("circle-Z2", "circle.json", "const_z2.json");
pub const SPHERE_Z: Scenario = plain("sphere2-Z", "sphere2.json", "const_z.json");
pub const SIMPLEX_Z: Scenario = plain("simplex2-Z", "simplex2.json", "const_z.json");
pub const CIRCLE_TWISTED_Z: Scenario = Scenario {
    name: "circle-twisted-Z",
    complex: "circle.json",
    group: None,
    coeffs: "const_z.json",
    twist: Some("circle_tau.json"),
    action: Some("negate_z.json"),
};
pub const CIRCLE_TWISTED_Z4: Scenario = Scenario {
    name: "circle-twisted-Z4",
    coeffs: "const_z4.json",
    action: Some("negate_z4.json"),
    ..CIRCLE_TWISTED_Z
};
pub const REFCIRCLE_Z: Scenario = Scenario {
    name: "refcircle-Z",
    complex: "refcircle.json",
    group: Some("z2.json"),
    coeffs: "const_z.json",
    twist: None,
    action: None,
};
pub const REFCIRCLE_FORGETFUL_Z: Scenario = plain("refcircle-trivial-G-Z", "refcircle.json", "const_z.json");
pub const REFCIRCLE_REDUCTION: Scenario = Scenario {
    name: "refcircle-reduction",
    coeffs: "reduction_z2.json",
    ..REFCIRCLE_Z
};
pub const TRIANGLE_KAPPA: Scenario = Scenario {
    name: "triangle-kappa",
    complex: "triangle.json",
    group: None,
    coeffs: "const_z.json",
    twist: Some("triangle_kappa.json"),
    action: None,
};
pub const REFCIRCLE_BAD_TAU: Scenario = Scenario {
    name: "refcircle-non-natural-tau",
    twist: Some("refcircle_bad_tau.json"),
    ..REFCIRCLE_Z
};
pub const BROKEN_FACE: Scenario = plain("broken-face", "broken_face.json", "const_z.json");

/// Scenarios on which both cohomology pipelines are compared.
pub const CROSSCHECK: &[Scenario] = &[
    CIRCLE_Z2,
    CIRCLE_TWISTED_Z,
    CIRCLE_TWISTED_Z4,
    REFCIRCLE_Z,
    TRIANGLE_KAPPA,
];

/// Every valid scenario.
pub const VALID: &[Scenario] = &[
    CIRCLE_Z,
    CIRCLE_Z2,
    SPHERE_Z,
    SIMPLEX_Z,
    CIRCLE_TWISTED_Z,
    CIRCLE_TWISTED_Z4,
    REFCIRCLE_Z,
    REFCIRCLE_FORGETFUL_Z,
    REFCIRCLE_REDUCTION,
    TRIANGLE_KAPPA,
];

pub fn by_name(name: &str) -> Option<Scenario> {
    VALID
        .iter()
        .chain([REFCIRCLE_BAD_TAU, BROKEN_FACE].iter())
        .find(|s| s.name == name)
        .copied()
}

/// Theory files with the axioms each is expected to fail.
pub const THEORIES: &[(&str, &[usize])] = &[
    ("theory_z2.json", &[]),
    ("theory_reduction.json", &[]),
    ("theory_zero_delta1.json", &[2]),
    ("theory_zero.json", &[4]),
    ("theory_trivial_psi.json", &[5]),
];

pub fn theory(name: &str, bounds: Option<(usize, usize)>) -> Result<crate::cartan::CartanTheory> {
    let text = file(name).ok_or_else(|| crate::error::Error::UnknownId(name.to_string()))?;
    crate::io::theory_from_json(&crate::io::parse(text, name)?, bounds, 1 << 12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::equivariant_cohomology;

    fn h(s: Scenario, n: usize) -> String {
        let t = s.parsed().unwrap().twist().unwrap();
        equivariant_cohomology(t.as_ref(), n).unwrap().normal_form().to_string()
    }

    #[test]
    fn valid_scenarios_validate() {
        for s in VALID {
            let t = s.parsed().unwrap().twist().unwrap();
            let rep = t.validate(3).unwrap();
            assert!(rep.is_ok(), "{}: {rep}", s.name);
        }
    }

    #[test]
    fn known_groups() {
        assert_eq!(
            (h(CIRCLE_TWISTED_Z, 0), h(CIRCLE_TWISTED_Z, 1)),
            ("0".into(), "Z/2".into())
        );
        assert_eq!(
            (h(CIRCLE_TWISTED_Z4, 0), h(CIRCLE_TWISTED_Z4, 1)),
            ("Z/2".into(), "Z/2".into())
        );
        assert_eq!((h(REFCIRCLE_Z, 0), h(REFCIRCLE_Z, 1)), ("Z".into(), "0".into()));
        assert_eq!((h(TRIANGLE_KAPPA, 0), h(TRIANGLE_KAPPA, 1)), ("0".into(), "Z/2".into()));
        assert_eq!(h(SPHERE_Z, 2), "Z");
    }

    #[test]
    fn theory_files_fail_as_labelled() {
        for (name, failing) in THEORIES {
            let t = theory(name, None).unwrap();
            let r = crate::cartan::check_axioms(&t, 1 << 12).unwrap();
            assert_eq!(&r.failing(), failing, "{name}");
        }
    }
}
