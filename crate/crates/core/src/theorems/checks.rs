//! Evaluation of one catalog entry on one primal space.

use crate::operators::{
    kuratowski_check, topology_from_base, KuratowskiReport, OperatorKind, OperatorTable,
};
use crate::primal::{Primal, PrimalSpace};
use crate::set::{SetFamily, Subset, Universe};
use crate::topology::Topology;

use super::catalog::TheoremId;

/// Failing tuples kept per evaluation.
pub(crate) const MAX_TUPLES: usize = 32;

#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub tuples: Vec<(Vec<Subset>, Option<String>)>,
    pub count: usize,
    pub notes: Vec<String>,
}

impl Outcome {
    fn fail(&mut self, subsets: Vec<Subset>) {
        self.fail_with(subsets, None);
    }

    fn fail_with(&mut self, subsets: Vec<Subset>, note: Option<String>) {
        self.count += 1;
        if self.tuples.len() < MAX_TUPLES {
            self.tuples.push((subsets, note));
        }
    }

    fn check(&mut self, ok: bool, subsets: &[Subset]) {
        if !ok {
            self.fail(subsets.to_vec());
        }
    }
}

/// Everything the checks read, computed once per space.
pub(crate) struct SpaceContext<'a> {
    pub space: &'a PrimalSpace,
    all: Vec<Subset>,
    dia: OperatorTable,
    dia_r: OperatorTable,
    cl: OperatorTable,
    cl_r: OperatorTable,
    tau_r: SetFamily,
    tau_star: SetFamily,
    /// Primals the monotonicity check compares against.
    others: &'a [Primal],
}

fn fixed_complements(table: &OperatorTable) -> SetFamily {
    let u = table.universe();
    let members = u.powerset().filter(|a| {
        let ac = a.complement();
        table.get(ac).expect("same universe") == ac
    });
    SetFamily::new(u, members).expect("same universe")
}

impl<'a> SpaceContext<'a> {
    pub fn new(space: &'a PrimalSpace, others: &'a [Primal]) -> Self {
        let dia = OperatorTable::build(space, OperatorKind::Diamond);
        let dia_r = OperatorTable::build(space, OperatorKind::DiamondR);
        let cl = OperatorTable::build(space, OperatorKind::ClDiamond);
        let cl_r = OperatorTable::build(space, OperatorKind::ClDiamondR);
        let tau_r = fixed_complements(&cl_r);
        let tau_star = fixed_complements(&cl);
        SpaceContext {
            space,
            all: space.universe().powerset().collect(),
            dia,
            dia_r,
            cl,
            cl_r,
            tau_r,
            tau_star,
            others,
        }
    }

    fn u(&self) -> &Universe {
        self.space.universe()
    }

    fn t(&self) -> &Topology {
        self.space.topology()
    }

    fn in_primal(&self, a: Subset) -> bool {
        self.space.primal().has(a)
    }

    fn dr(&self, a: Subset) -> Subset {
        self.dia_r.at(a)
    }

    fn d(&self, a: Subset) -> Subset {
        self.dia.at(a)
    }

    fn clr(&self, a: Subset) -> Subset {
        self.cl_r.at(a)
    }

    fn is_delta_open(&self, a: Subset) -> bool {
        self.t().delta_open_family().has(a)
    }

    fn is_delta_closed(&self, a: Subset) -> bool {
        self.is_delta_open(a.complement())
    }

    fn pairs(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.all
            .iter()
            .flat_map(move |&a| self.all.iter().map(move |&b| (a, b)))
    }

    /// Unordered pairs `a ≤ b`, for symmetric statements.
    fn half_pairs(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.pairs().filter(|(a, b)| a <= b)
    }

    fn tables_agree(&self, out: &mut Outcome, left: &OperatorTable, right: &OperatorTable) {
        for &a in &self.all {
            if left.at(a) != right.at(a) {
                out.fail_with(
                    vec![a],
                    Some(format!("{} and {} differ", left.name(), right.name())),
                );
            }
        }
    }

    fn family_gap(&self, out: &mut Outcome, inner: &SetFamily, outer: &SetFamily, what: &str) {
        for a in inner.difference(outer) {
            out.fail_with(vec![a], Some(what.to_owned()));
        }
    }

    fn kuratowski_failures(&self, out: &mut Outcome, report: &KuratowskiReport) {
        for axiom in &report.axioms {
            for w in &axiom.witnesses {
                out.fail_with(w.clone(), Some(format!("{:?} fails", axiom.axiom)));
            }
        }
    }

    pub fn evaluate(&self, id: TheoremId) -> Outcome {
        let mut out = Outcome::default();
        let u = self.u().clone();
        let t = self.t();
        let ro = t.regular_open_family();
        let x = u.full();
        let empty = u.empty();
        match id {
            TheoremId::T21a => {
                for &a in &self.all {
                    let by_ro =
                        t.points_where(|p| ro.iter().any(|v| v.contains(p) && v.is_subset_of(a)));
                    let by_open = t.points_where(|p| {
                        t.opens()
                            .iter()
                            .any(|v| v.contains(p) && t.int(t.cl(v)).is_subset_of(a))
                    });
                    let di = t.delta_int(a);
                    out.check(di == by_ro && di == by_open, &[a]);
                }
            }
            TheoremId::T21b => {
                for &a in &self.all {
                    let by_rc = t
                        .regular_closed_family()
                        .iter()
                        .filter(|c| a.is_subset_of(*c))
                        .fold(x, |acc, c| acc & c);
                    let by_open = t.points_where(|p| {
                        t.opens()
                            .iter()
                            .filter(|v| v.contains(p))
                            .all(|v| t.int(t.cl(v)).meets(a))
                    });
                    let dc = t.delta_cl(a);
                    out.check(dc == by_rc && dc == by_open, &[a]);
                }
            }
            TheoremId::T21c => {
                for &a in &self.all {
                    out.check(t.delta_cl(!a) == !t.delta_int(a), &[a]);
                }
            }
            TheoremId::T21d => {
                for &a in &self.all {
                    out.check(t.delta_int(!a) == !t.delta_cl(a), &[a]);
                }
            }
            TheoremId::RoMeet => {
                for (i, a) in ro.iter().enumerate() {
                    for b in ro.members()[i..].iter().copied() {
                        out.check(ro.has(a & b), &[a, b]);
                    }
                }
            }
            TheoremId::TDelta => {
                self.family_gap(&mut out, ro, t.opens(), "regular open but not open");
                self.family_gap(
                    &mut out,
                    t.delta_open_family(),
                    t.opens(),
                    "δ-open but not open",
                );
                if let Err(e) = Topology::validate(t.delta_open_family(), &u) {
                    out.fail_with(vec![], Some(format!("τ_δ is not a topology: {e}")));
                }
            }
            TheoremId::C23 => {
                let base = self.space.primal().members();
                let mut variants = vec![(None, base.clone())];
                for &s in &self.all {
                    let toggled = base
                        .iter()
                        .filter(|m| *m != s)
                        .chain((!base.has(s)).then_some(s));
                    variants.push((Some(s), SetFamily::new(&u, toggled).expect("same universe")));
                }
                for (toggled, fam) in variants {
                    let direct = Primal::validate(&fam, &u).is_ok();
                    let dual = Primal::satisfies_dual_conditions(&fam, &u);
                    if direct != dual {
                        out.fail_with(
                            toggled.into_iter().collect(),
                            Some(format!("family {}", u.render_family(&fam))),
                        );
                    }
                }
            }
            TheoremId::T36a => {
                for &a in &self.all {
                    out.check(self.d(a).is_subset_of(self.dr(a)), &[a]);
                }
            }
            TheoremId::T36b => {
                for &a in self.all.iter().filter(|a| self.is_delta_closed(**a)) {
                    out.check(self.dr(a).is_subset_of(a), &[a]);
                }
            }
            TheoremId::T36c => out.check(self.dr(empty).is_empty(), &[empty]),
            TheoremId::T36d => {
                for &a in &self.all {
                    out.check(self.is_delta_closed(self.dr(a)), &[a]);
                }
            }
            TheoremId::T36e => {
                for &a in &self.all {
                    out.check(self.dr(self.dr(a)).is_subset_of(self.dr(a)), &[a]);
                }
            }
            TheoremId::T36f => {
                for (a, b) in self.pairs().filter(|(a, b)| a.is_subset_of(*b)) {
                    out.check(self.dr(a).is_subset_of(self.dr(b)), &[a, b]);
                }
            }
            TheoremId::T36g => {
                for (a, b) in self.half_pairs() {
                    out.check(self.dr(a | b) == self.dr(a) | self.dr(b), &[a, b]);
                }
            }
            TheoremId::T36h => {
                for (a, b) in self.half_pairs() {
                    out.check(
                        self.dr(a & b).is_subset_of(self.dr(a) & self.dr(b)),
                        &[a, b],
                    );
                }
            }
            TheoremId::Tmt => {
                for (a, b) in self.pairs().filter(|(a, _)| self.is_delta_open(*a)) {
                    out.check((a & self.dr(b)).is_subset_of(self.dr(a & b)), &[a, b]);
                }
            }
            TheoremId::Teq => {
                let whole = self.dr(x) == x;
                let closed_in_primal = t
                    .regular_closed_family()
                    .iter()
                    .filter(|c| *c != x)
                    .all(|c| self.in_primal(c));
                let expanding = ro.iter().all(|a| a.is_subset_of(self.dr(a)));
                let note = format!(
                    "X^⋄_R = X: {whole}; RC(X)∖{{X}} ⊆ 𝒫: {closed_in_primal}; A ⊆ A^⋄_R on RO(X): {expanding}"
                );
                if !(whole == closed_in_primal && whole == expanding) {
                    out.fail_with(vec![], Some(note.clone()));
                }
                out.notes.push(note);
            }
            TheoremId::T5 => {
                for &a in &self.all {
                    out.check(self.dr(a).is_empty() || self.in_primal(!a), &[a]);
                }
            }
            TheoremId::C20 => {
                for &a in self.all.iter().filter(|a| !self.in_primal(!**a)) {
                    out.check(self.dr(a).is_empty(), &[a]);
                }
            }
            TheoremId::T4 => {
                for (a, b) in self.pairs() {
                    out.check(
                        self.dr(a) - self.dr(b) == self.dr(a - b) - self.dr(b),
                        &[a, b],
                    );
                }
            }
            TheoremId::T14 => {
                for (a, b) in self.pairs().filter(|(_, b)| !self.in_primal(!*b)) {
                    let ok = self.dr(a | b) == self.dr(a) && self.dr(a) == self.dr(a - b);
                    out.check(ok, &[a, b]);
                }
            }
            TheoremId::T44a => out.check(self.clr(empty).is_empty(), &[empty]),
            TheoremId::T44b => out.check(self.clr(x) == x, &[x]),
            TheoremId::T44c => {
                for &a in &self.all {
                    let c = self.cl.at(a);
                    out.check(a.is_subset_of(c) && c.is_subset_of(self.clr(a)), &[a]);
                }
            }
            TheoremId::T44d => {
                for (a, b) in self.pairs().filter(|(a, b)| a.is_subset_of(*b)) {
                    out.check(self.clr(a).is_subset_of(self.clr(b)), &[a, b]);
                }
            }
            TheoremId::T44e => {
                for (a, b) in self.half_pairs() {
                    out.check(self.clr(a | b) == self.clr(a) | self.clr(b), &[a, b]);
                }
            }
            TheoremId::T44f => {
                for &a in &self.all {
                    out.check(self.clr(self.clr(a)) == self.clr(a), &[a]);
                }
            }
            TheoremId::C45 => self.kuratowski_failures(&mut out, &kuratowski_check(&self.cl_r)),
            TheoremId::InfoCl => {
                let report = kuratowski_check(&self.cl);
                self.kuratowski_failures(&mut out, &report);
                out.notes.push(format!(
                    "cl^⋄ is a Kuratowski closure operator: {}",
                    report.is_closure_operator()
                ));
            }
            TheoremId::Ttau => {
                let td = t.delta_open_family();
                self.family_gap(&mut out, td, &self.tau_r, "τ_δ-open but not τ^⋄_R-open");
                self.family_gap(
                    &mut out,
                    &self.tau_r,
                    &self.tau_star,
                    "τ^⋄_R-open but not τ^⋄-open",
                );
                self.family_gap(
                    &mut out,
                    t.opens(),
                    &self.tau_star,
                    "τ-open but not τ^⋄-open",
                );
                for (name, fam) in [("τ^⋄_R", &self.tau_r), ("τ^⋄", &self.tau_star)] {
                    if let Err(e) = Topology::validate(fam, &u) {
                        out.fail_with(vec![], Some(format!("{name} is not a topology: {e}")));
                    }
                }
            }
            TheoremId::TmemA => {
                for &a in &self.all {
                    let pointwise = a.points().all(|p| {
                        ro.iter()
                            .any(|v| v.contains(p) && !self.in_primal(v.complement() | a))
                    });
                    out.check(self.tau_r.has(a) == pointwise, &[a]);
                }
            }
            TheoremId::TmemB => {
                for &a in self.all.iter().filter(|a| !self.in_primal(**a)) {
                    out.check(self.tau_r.has(a), &[a]);
                }
            }
            TheoremId::Text => {
                let primal = self.space.primal();
                let everything = self.tau_r.len() == self.all.len();
                let is_delta = &self.tau_r == t.delta_open_family();
                if primal.members().is_empty() && !everything {
                    out.fail_with(vec![], Some("𝒫 = ∅ but τ^⋄_R ≠ 2^X".into()));
                }
                if primal.members().len() + 1 == self.all.len() && !is_delta {
                    out.fail_with(vec![], Some("𝒫 = 2^X∖{X} but τ^⋄_R ≠ τ_δ".into()));
                }
                out.notes
                    .push(format!("𝒫 = ∅: {}", primal.members().is_empty()));
                out.notes.push(format!(
                    "𝒫 = 2^X∖{{X}}: {}",
                    primal.members().len() + 1 == self.all.len()
                ));
                out.notes.push(format!("τ^⋄_R = 2^X: {everything}"));
                out.notes.push(format!("τ^⋄_R = τ_δ: {is_delta}"));
            }
            TheoremId::Tbase => match topology_from_base(&self.space.base_family(), &u) {
                Ok(generated) => {
                    self.family_gap(
                        &mut out,
                        generated.opens(),
                        &self.tau_r,
                        "generated but not τ^⋄_R-open",
                    );
                    self.family_gap(
                        &mut out,
                        &self.tau_r,
                        generated.opens(),
                        "τ^⋄_R-open but not generated",
                    );
                }
                Err(e) => out.fail_with(vec![], Some(format!("base rejected: {e}"))),
            },
            TheoremId::Tmono => {
                let p = self.space.primal();
                for q in self.others {
                    let (small, large) = if p.is_subprimal_of(q) {
                        (p, q)
                    } else if q.is_subprimal_of(p) {
                        (q, p)
                    } else {
                        continue;
                    };
                    let tau_of = |pr: &Primal| {
                        self.space
                            .with_primal(pr.clone())
                            .expect("same universe")
                            .tau_diamond_r()
                    };
                    let (t_small, t_large) = (tau_of(small), tau_of(large));
                    for a in t_large.difference(&t_small) {
                        out.fail_with(
                            vec![a],
                            Some(format!(
                                "open for the larger primal {} but not for {}",
                                u.render_family(large.members()),
                                u.render_family(small.members())
                            )),
                        );
                    }
                }
            }
            TheoremId::Treg => {
                if t.is_regular_space() {
                    self.tables_agree(&mut out, &self.dia, &self.dia_r);
                    self.tables_agree(&mut out, &self.cl, &self.cl_r);
                    self.family_gap(&mut out, &self.tau_star, &self.tau_r, "τ^⋄ ≠ τ^⋄_R");
                }
                out.notes.push(format!("regular: {}", t.is_regular_space()));
            }
            TheoremId::C33 => {
                if t.is_hausdorff() {
                    if !t.is_discrete() || !t.is_regular_space() {
                        out.fail_with(
                            vec![],
                            Some("Hausdorff but not discrete and regular".into()),
                        );
                    }
                    self.tables_agree(&mut out, &self.dia, &self.dia_r);
                }
                out.notes.push(format!("Hausdorff: {}", t.is_hausdorff()));
            }
            TheoremId::ConvExt => {
                for &a in &self.all {
                    out.check(a.is_subset_of(self.dr(a)), &[a]);
                }
            }
            TheoremId::ConvSub => {
                for &a in &self.all {
                    out.check(self.dr(a).is_subset_of(a), &[a]);
                }
            }
            TheoremId::ConvT36a => {
                for &a in &self.all {
                    out.check(self.dr(a).is_subset_of(self.d(a)), &[a]);
                }
            }
            TheoremId::ConvT36h => {
                for (a, b) in self.half_pairs() {
                    out.check(self.dr(a & b) == self.dr(a) & self.dr(b), &[a, b]);
                }
            }
            TheoremId::ConvDiag1 => self.family_gap(
                &mut out,
                &self.tau_r,
                t.delta_open_family(),
                "τ^⋄_R-open but not τ_δ-open",
            ),
            TheoremId::ConvDiag2 => self.family_gap(
                &mut out,
                &self.tau_star,
                &self.tau_r,
                "τ^⋄-open but not τ^⋄_R-open",
            ),
            TheoremId::ConvDiag3 => self.family_gap(
                &mut out,
                &self.tau_star,
                t.opens(),
                "τ^⋄-open but not τ-open",
            ),
            TheoremId::ConvDiag4 => self.family_gap(
                &mut out,
                t.opens(),
                t.delta_open_family(),
                "τ-open but not τ_δ-open",
            ),
            TheoremId::IndepTau => {
                let only_tau = t.opens().difference(&self.tau_r);
                let only_r = self.tau_r.difference(t.opens());
                if let (Some(&a), Some(&b)) = (only_tau.first(), only_r.first()) {
                    out.fail_with(
                        vec![a, b],
                        Some("first set is τ-open but not τ^⋄_R-open; second is τ^⋄_R-open but not τ-open".into()),
                    );
                }
            }
            TheoremId::ConvTmemB => {
                for &a in self.all.iter().filter(|a| self.tau_r.has(**a)) {
                    out.check(!self.in_primal(a), &[a]);
                }
            }
            TheoremId::ConvTextA => {
                let everything = self.tau_r.len() == self.all.len();
                if everything && !self.space.primal().members().is_empty() {
                    out.fail_with(vec![], Some("τ^⋄_R = 2^X while 𝒫 ≠ ∅".into()));
                }
            }
            TheoremId::ConvTextB => {
                let maximal = self.space.primal().members().len() + 1 == self.all.len();
                if &self.tau_r == t.delta_open_family() && !maximal {
                    out.fail_with(vec![], Some("τ^⋄_R = τ_δ while 𝒫 ≠ 2^X∖{X}".into()));
                }
            }
        }
        out
    }
}
