use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// How a catalog entry is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremKind {
    /// Holds on every primal space; a failure is a bug.
    Direct,
    /// A converse or independence claim; a failure is a counterexample.
    Converse,
    /// Reported without any expectation.
    Informational,
}

macro_rules! catalog {
    ($( $variant:ident => $key:literal, $kind:ident, $fixture:expr, $desc:literal; )*) => {
        /// Identifier of one executable property.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(into = "String", try_from = "String")]
        pub enum TheoremId {
            $( $variant, )*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[ $( TheoremId::$variant, )* ];

            pub fn key(self) -> &'static str {
                match self { $( TheoremId::$variant => $key, )* }
            }

            pub fn description(self) -> &'static str {
                match self { $( TheoremId::$variant => $desc, )* }
            }

            pub fn kind(self) -> TheoremKind {
                match self { $( TheoremId::$variant => TheoremKind::$kind, )* }
            }

            /// For converse claims with a published counterexample, the
            /// fixture that exhibits it.
            pub fn refuting_fixture(self) -> Option<&'static str> {
                match self { $( TheoremId::$variant => $fixture, )* }
            }
        }
    };
}

catalog! {
    T21a => "T2.1a", Direct, None, "δ-int(A) = {x : some U ∈ RO(X,x) has U ⊆ A} = {x : some U ∈ O(X,x) has int(cl(U)) ⊆ A}";
    T21b => "T2.1b", Direct, None, "δ-cl(A) = ⋂{C ∈ RC(X) : A ⊆ C} = {x : every U ∈ RO(X,x) meets A} = {x : int(cl(U)) meets A for every U ∈ O(X,x)}";
    T21c => "T2.1c", Direct, None, "δ-cl(A^c) = (δ-int(A))^c";
    T21d => "T2.1d", Direct, None, "δ-int(A^c) = (δ-cl(A))^c";
    RoMeet => "RO-MEET", Direct, None, "RO(X) is closed under pairwise intersection";
    TDelta => "TDELTA", Direct, None, "RO(X) ⊆ τ, τ_δ ⊆ τ, and τ_δ is a topology";
    C23 => "C2.3", Direct, None, "primal axioms and their complement form agree on 𝒫 and on every family one member away from it";
    T36a => "T3.6a", Direct, None, "A^⋄ ⊆ A^⋄_R";
    T36b => "T3.6b", Direct, None, "A δ-closed ⇒ A^⋄_R ⊆ A";
    T36c => "T3.6c", Direct, None, "∅^⋄_R = ∅";
    T36d => "T3.6d", Direct, None, "A^⋄_R is δ-closed";
    T36e => "T3.6e", Direct, None, "(A^⋄_R)^⋄_R ⊆ A^⋄_R";
    T36f => "T3.6f", Direct, None, "A ⊆ B ⇒ A^⋄_R ⊆ B^⋄_R";
    T36g => "T3.6g", Direct, None, "(A∪B)^⋄_R = A^⋄_R ∪ B^⋄_R";
    T36h => "T3.6h", Direct, None, "(A∩B)^⋄_R ⊆ A^⋄_R ∩ B^⋄_R";
    Tmt => "TMT", Direct, None, "A δ-open ⇒ A ∩ B^⋄_R ⊆ (A∩B)^⋄_R";
    Teq => "TEQ", Direct, None, "X^⋄_R = X ⇔ RC(X)∖{X} ⊆ 𝒫 ⇔ A ⊆ A^⋄_R for every regular open A";
    T5 => "T5", Direct, None, "A^⋄_R ≠ ∅ ⇒ A^c ∈ 𝒫";
    C20 => "C20", Direct, None, "A^c ∉ 𝒫 ⇒ A^⋄_R = ∅";
    T4 => "T4", Direct, None, "A^⋄_R ∖ B^⋄_R = (A∖B)^⋄_R ∖ B^⋄_R";
    T14 => "T14", Direct, None, "B^c ∉ 𝒫 ⇒ (A∪B)^⋄_R = A^⋄_R = (A∖B)^⋄_R";
    T44a => "T4.4a", Direct, None, "cl^⋄_R(∅) = ∅";
    T44b => "T4.4b", Direct, None, "cl^⋄_R(X) = X";
    T44c => "T4.4c", Direct, None, "A ⊆ cl^⋄(A) ⊆ cl^⋄_R(A)";
    T44d => "T4.4d", Direct, None, "A ⊆ B ⇒ cl^⋄_R(A) ⊆ cl^⋄_R(B)";
    T44e => "T4.4e", Direct, None, "cl^⋄_R(A∪B) = cl^⋄_R(A) ∪ cl^⋄_R(B)";
    T44f => "T4.4f", Direct, None, "cl^⋄_R(cl^⋄_R(A)) = cl^⋄_R(A)";
    C45 => "C4.5", Direct, None, "cl^⋄_R is a Kuratowski closure operator";
    Ttau => "TTAU", Direct, None, "τ_δ ⊆ τ^⋄_R ⊆ τ^⋄ and τ ⊆ τ^⋄, all of them topologies";
    TmemA => "TMEMa", Direct, None, "A ∈ τ^⋄_R ⇔ every x ∈ A has U ∈ RO(X,x) with U^c ∪ A ∉ 𝒫";
    TmemB => "TMEMb", Direct, None, "A ∉ 𝒫 ⇒ A ∈ τ^⋄_R";
    Text => "TEXT", Direct, None, "𝒫 = ∅ ⇒ τ^⋄_R = 2^X, and 𝒫 = 2^X∖{X} ⇒ τ^⋄_R = τ_δ";
    Tbase => "TBASE", Direct, None, "{T∩P : T ∈ τ_δ, P ∉ 𝒫} is a base for τ^⋄_R";
    Tmono => "TMONO", Direct, None, "𝒫 ⊆ 𝒬 ⇒ τ^⋄_R(𝒬) ⊆ τ^⋄_R(𝒫)";
    Treg => "TREG", Direct, None, "regular space ⇒ A^⋄ = A^⋄_R, cl^⋄ = cl^⋄_R and τ^⋄ = τ^⋄_R";
    C33 => "C3.3", Direct, None, "Hausdorff (finite, hence discrete) ⇒ regular, and the operators coincide";
    InfoCl => "INFO-CL", Informational, None, "Kuratowski axioms for cl^⋄";
    ConvExt => "CONV-R3-EXT", Converse, Some("EX-A"), "converse claim: A ⊆ A^⋄_R for every A";
    ConvSub => "CONV-R3-SUB", Converse, Some("EX-B"), "converse claim: A^⋄_R ⊆ A for every A";
    ConvT36a => "CONV-T3.6a", Converse, None, "converse claim: A^⋄_R ⊆ A^⋄";
    ConvT36h => "CONV-T3.6h", Converse, Some("EX-C"), "converse claim: (A∩B)^⋄_R = A^⋄_R ∩ B^⋄_R";
    ConvDiag1 => "CONV-DIAG-1", Converse, Some("EX-D"), "converse claim: τ^⋄_R-open ⇒ τ_δ-open";
    ConvDiag2 => "CONV-DIAG-2", Converse, Some("EX-D"), "converse claim: τ^⋄-open ⇒ τ^⋄_R-open";
    ConvDiag3 => "CONV-DIAG-3", Converse, None, "converse claim: τ^⋄-open ⇒ τ-open";
    ConvDiag4 => "CONV-DIAG-4", Converse, None, "converse claim: τ-open ⇒ τ_δ-open";
    IndepTau => "INDEP-TAU", Converse, Some("EX-D"), "comparability claim: τ ⊆ τ^⋄_R or τ^⋄_R ⊆ τ";
    ConvTmemB => "CONV-T3.3b", Converse, Some("EX-E"), "converse claim: A ∈ τ^⋄_R ⇒ A ∉ 𝒫";
    ConvTextA => "CONV-TEXT-a", Converse, Some("EX-E"), "converse claim: τ^⋄_R = 2^X ⇒ 𝒫 = ∅";
    ConvTextB => "CONV-TEXT-b", Converse, Some("EX-F"), "converse claim: τ^⋄_R = τ_δ ⇒ 𝒫 = 2^X∖{X}";
}

impl TheoremId {
    pub fn is_direct(self) -> bool {
        self.kind() == TheoremKind::Direct
    }

    pub fn direct() -> impl Iterator<Item = TheoremId> {
        Self::ALL.iter().copied().filter(|t| t.is_direct())
    }

    pub fn converses() -> impl Iterator<Item = TheoremId> {
        Self::ALL
            .iter()
            .copied()
            .filter(|t| t.kind() == TheoremKind::Converse)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id `{0}`")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.key().eq_ignore_ascii_case(s))
            .or(match s {
                "CONV-TMEMb" => Some(TheoremId::ConvTmemB),
                _ => None,
            })
            .ok_or_else(|| UnknownTheorem(s.to_owned()))
    }
}

impl From<TheoremId> for String {
    fn from(id: TheoremId) -> String {
        id.key().to_owned()
    }
}

impl TryFrom<String> for TheoremId {
    type Error = UnknownTheorem;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn keys_are_unique_and_parse_back() {
        let keys: HashSet<&str> = TheoremId::ALL.iter().map(|t| t.key()).collect();
        assert_eq!(keys.len(), TheoremId::ALL.len());
        for &t in TheoremId::ALL {
            assert_eq!(t.key().parse::<TheoremId>().unwrap(), t);
        }
        assert!("T9.9".parse::<TheoremId>().is_err());
        assert_eq!(
            "conv-t3.6h".parse::<TheoremId>().unwrap(),
            TheoremId::ConvT36h
        );
    }

    #[test]
    fn only_converses_name_fixtures() {
        for &t in TheoremId::ALL {
            if t.refuting_fixture().is_some() {
                assert_eq!(t.kind(), TheoremKind::Converse);
            }
        }
    }
}
