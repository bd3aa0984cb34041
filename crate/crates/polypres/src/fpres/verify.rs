use super::{todd_coxeter, Presentation, Word};
use crate::perm::{Perm, PermGroup};
use crate::Error;
use std::fmt;

/// Evaluates every relator under the assignment. Entry `i` is true when
/// relator `i` maps to the identity.
pub fn relator_check(p: &Presentation, assignment: &[Perm]) -> Result<Vec<bool>, Error> {
    if assignment.len() != p.gens.len() {
        return Err(Error::Invalid(format!(
            "assignment has {} images for {} generators",
            assignment.len(),
            p.gens.len()
        )));
    }
    if let Some(first) = assignment.first() {
        if let Some(bad) = assignment.iter().find(|g| g.degree() != first.degree()) {
            return Err(Error::DegreeMismatch(first.degree(), bad.degree()));
        }
    }
    Ok(p.relators.iter().map(|r| r.eval_perm(assignment).is_identity()).collect())
}

/// How the size bound is obtained.
#[derive(Clone, Debug)]
pub enum Strategy {
    /// Enumerate cosets of the trivial subgroup.
    Full,
    /// Enumerate cosets of the subgroup generated by `words`, whose order in
    /// the presented group is known to be at most `order`.
    SubgroupIndex { words: Vec<Word>, order: u128, label: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub relators: Vec<bool>,
    pub surjective: bool,
    pub target_order: u128,
    /// (subgroup description, index found, cosets used)
    pub enumeration: Option<(String, usize, usize)>,
    pub concluded_order: Option<u128>,
}

impl VerificationReport {
    pub fn relators_pass(&self) -> bool {
        self.relators.iter().all(|&b| b)
    }

    pub fn ok(&self) -> bool {
        self.concluded_order == Some(self.target_order)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed: Vec<usize> = (0..self.relators.len()).filter(|&i| !self.relators[i]).collect();
        if failed.is_empty() {
            writeln!(f, "relator check: PASS ({} relators)", self.relators.len())?;
        } else {
            writeln!(f, "relator check: FAIL (relators {failed:?})")?;
        }
        writeln!(f, "surjective: {}", self.surjective)?;
        writeln!(f, "target order: {}", self.target_order)?;
        if let Some((s, idx, used)) = &self.enumeration {
            writeln!(f, "enumeration: subgroup {s}, index {idx}, cosets used {used}")?;
        }
        match self.concluded_order {
            Some(o) => writeln!(f, "order: {o}"),
            None => writeln!(f, "order: not certified"),
        }
    }
}

/// Certifies that `p` presents `target` under `assignment`: the relators hold,
/// the images generate `target`, and coset enumeration bounds the presented
/// group by `|target|`.
pub fn verify_presentation(
    p: &Presentation,
    target: &PermGroup,
    assignment: &[Perm],
    strategy: &Strategy,
    max_cosets: usize,
) -> Result<VerificationReport, Error> {
    let relators = relator_check(p, assignment)?;
    let target_order = target.order();
    let images = PermGroup::new(target.degree(), assignment.to_vec());
    let inside = assignment.iter().all(|g| target.contains(g));
    let surjective = inside && images.order() == target_order;
    let (enumeration, bound) = match strategy {
        Strategy::Full => {
            let t = todd_coxeter(p, &[], max_cosets)?;
            (("trivial".to_string(), t.index, t.cosets_used), t.index as u128)
        }
        Strategy::SubgroupIndex { words, order, label } => {
            let t = todd_coxeter(p, words, max_cosets)?;
            ((label.clone(), t.index, t.cosets_used), t.index as u128 * order)
        }
    };
    let concluded_order =
        (relators.iter().all(|&b| b) && surjective && bound == target_order).then_some(bound);
    Ok(VerificationReport { relators, surjective, target_order, enumeration: Some(enumeration), concluded_order })
}
