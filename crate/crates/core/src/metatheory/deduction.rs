use crate::formula::Formula;
use crate::kernel::check;
use crate::proof::{Derivation, Extension, Justification, Proof, ProofBuilder};

use super::MetaError;

/// Appends the five-step AX1/AX2 derivation of `a ⊃ a`; returns its index.
pub(crate) fn identity_into(b: &mut ProofBuilder, a: &Formula) -> usize {
    let aa = Formula::implies(a.clone(), a.clone());
    let s1 = b.ax1(a, &aa); // a ⊃ ((a ⊃ a) ⊃ a)
    let s2 = b.ax1(a, a); // a ⊃ (a ⊃ a)
    let s3 = b.ax2(a, &aa, a);
    let s4 = b.mp(s3, s1); // (a ⊃ (a ⊃ a)) ⊃ (a ⊃ a)
    b.mp(s4, s2)
}

/// Hypothesis-free proof of `a ⊃ a` using only AX1, AX2 and modus ponens.
pub fn prove_identity(a: &Formula) -> Proof {
    let mut b = ProofBuilder::new();
    identity_into(&mut b, a);
    b.finish()
}

/// Discharges every hypothesis equal to `a`, producing a proof of
/// `a ⊃ conclusion(d)`. `d` must already be valid; if `a` is not a hypothesis
/// the discharge is vacuous and still well-formed.
pub(crate) fn discharge(d: &Proof, a: &Formula) -> Proof {
    let hypotheses = d.hypotheses.iter().filter(|h| *h != a).cloned().collect();
    let mut b = ProofBuilder::with_hypotheses(hypotheses);
    let mut image: Vec<usize> = Vec::with_capacity(d.steps.len());
    for step in &d.steps {
        let f = &step.formula;
        let lifted = match &step.justification {
            Justification::Hypothesis(k) if &d.hypotheses[*k] == a => identity_into(&mut b, a),
            Justification::ModusPonens { major, minor } => {
                let minor_formula = &d.steps[*minor].formula;
                let dist = b.ax2(a, minor_formula, f);
                let t = b.mp(dist, image[*major]);
                b.mp(t, image[*minor])
            }
            j => {
                let s = match j {
                    Justification::Hypothesis(_) => b.hyp(f),
                    Justification::ExtensionAxiom(k) => b.ext(*k, f),
                    Justification::AxiomInstance { scheme, sub } => b.axiom(*scheme, sub.clone()),
                    Justification::ModusPonens { .. } => unreachable!(),
                };
                let weaken = b.ax1(f, a);
                b.mp(weaken, s)
            }
        };
        image.push(lifted);
    }
    b.finish()
}

/// Turns a deduction of `B` from `Γ ∪ {a}` into a deduction of `a ⊃ B` from
/// `Γ` in the same extension. All occurrences of `a` in the hypothesis list
/// are removed; other hypotheses keep their relative order.
pub fn deduction_transform(
    d: &Derivation,
    ext: &Extension,
    a: &Formula,
) -> Result<Proof, MetaError> {
    check(d, ext)?;
    if !d.hypotheses.contains(a) {
        return Err(MetaError::NotAHypothesis(a.clone()));
    }
    Ok(discharge(d, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;
    use crate::scheme::SchemeId;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn identity_proofs() {
        for a in ["q", "p -> q", "(p -> p) -> p"] {
            let a = f(a);
            let p = prove_identity(&a);
            assert_eq!(p.len(), 5);
            assert_eq!(p.scheme_count(SchemeId::Ax3), 0);
            assert_eq!(
                check(&p, &Extension::base()).unwrap(),
                Formula::implies(a.clone(), a)
            );
        }
    }

    #[test]
    fn discharging_the_only_hypothesis() {
        let mut b = ProofBuilder::new();
        b.hyp(&f("p"));
        let out = deduction_transform(&b.finish(), &Extension::base(), &f("p")).unwrap();
        assert!(out.hypotheses.is_empty());
        assert_eq!(check(&out, &Extension::base()).unwrap(), f("p -> p"));
    }

    #[test]
    fn discharging_over_modus_ponens() {
        let mut b = ProofBuilder::new();
        let s1 = b.hyp(&f("p"));
        let s2 = b.hyp(&f("p -> q"));
        b.mp(s2, s1);
        let out = deduction_transform(&b.finish(), &Extension::base(), &f("p")).unwrap();
        assert_eq!(out.hypotheses, vec![f("p -> q")]);
        assert_eq!(check(&out, &Extension::base()).unwrap(), f("p -> q"));
    }

    #[test]
    fn discharging_everything_gives_transitivity() {
        let mut b = ProofBuilder::new();
        let pq = b.hyp(&f("p -> q"));
        let qr = b.hyp(&f("q -> r"));
        let p = b.hyp(&f("p"));
        let q = b.mp(pq, p);
        b.mp(qr, q);
        let mut proof = b.finish();
        let ext = Extension::base();
        for h in ["p", "q -> r", "p -> q"] {
            proof = deduction_transform(&proof, &ext, &f(h)).unwrap();
        }
        assert!(proof.hypotheses.is_empty());
        assert_eq!(
            check(&proof, &ext).unwrap(),
            f("(p -> q) -> ((q -> r) -> (p -> r))")
        );
    }

    #[test]
    fn extension_steps_are_weakened() {
        let ext = Extension::new(vec![f("r")]);
        let mut b = ProofBuilder::new();
        b.hyp(&f("p"));
        b.ext(0, &f("r"));
        let out = deduction_transform(&b.finish(), &ext, &f("p")).unwrap();
        assert_eq!(check(&out, &ext).unwrap(), f("p -> r"));
        assert!(check(&out, &Extension::base()).is_err());
    }

    #[test]
    fn duplicate_hypotheses_are_all_removed() {
        let d = Proof {
            hypotheses: vec![f("p"), f("q"), f("p")],
            steps: vec![crate::proof::Step {
                formula: f("p"),
                justification: Justification::Hypothesis(2),
            }],
        };
        let out = deduction_transform(&d, &Extension::base(), &f("p")).unwrap();
        assert_eq!(out.hypotheses, vec![f("q")]);
        assert_eq!(check(&out, &Extension::base()).unwrap(), f("p -> p"));
    }

    #[test]
    fn rejects_bad_input() {
        let mut b = ProofBuilder::new();
        b.hyp(&f("p"));
        let d = b.finish();
        assert_eq!(
            deduction_transform(&d, &Extension::base(), &f("q")),
            Err(MetaError::NotAHypothesis(f("q")))
        );
        let mut broken = d.clone();
        broken.steps[0].formula = f("q");
        assert!(matches!(
            deduction_transform(&broken, &Extension::base(), &f("p")),
            Err(MetaError::Invalid(_))
        ));
    }
}
