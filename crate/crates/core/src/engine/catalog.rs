/// One entry of the rule catalog.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RuleInfo {
    pub id: &'static str,
    pub citation: &'static str,
    pub quote: &'static str,
    pub summary: &'static str,
}

macro_rules! rules {
    ($($id:literal, $cite:literal, $quote:literal, $summary:literal;)*) => {
        pub const RULES: &[RuleInfo] = &[$(RuleInfo { id: $id, citation: $cite, quote: $quote, summary: $summary }),*];
    };
}

rules! {
    "R-1.3", "Prop 1.3", "are loose if at least one of the following conditions hold",
        "m < n, N noncompact, pi1 infinite or a fibration with section: every pair is loose";
    "R-2.1", "Lemma 2.1", "the pair (f_1,f_2) is loose",
        "i_* onto from the punctured manifold: every pair is loose";
    "R-1.4", "Prop 1.4", "the pair (f,f) is loose by small deformation",
        "noncompact, chi = 0 or pi_{m-1}(S^{n-1}) = 0: selfpairs loose by small deformation";
    "R-1.5", "Ex 1.5", "except when m=2 and N=S^2 or RP(2)",
        "surfaces: selfpairs loose by small deformation outside two exceptions";
    "R-1.6", "(1.6)", "must vanish if (f_1,f_2) is loose",
        "loose pairs have vanishing omega#";
    "R-1.7", "Thm 1.7", "Then a pair (f_1,f_2) is loose precisely if",
        "m < 2n-2: omega# and omega~ are complete looseness obstructions";
    "R-1.11", "(1.11)", "is the complete looseness obstruction for the pair (f,y_0)",
        "root pairs into spheres and projective spaces: deg# decides looseness";
    "R-1.14", "Thm 1.15 (i), (v)", "Given [f] in pi_m(N)",
        "direct evaluation of boundary[f] and E(boundary[f]) from the tables";
    "R-1.15", "Thm 1.15", "we have the following logical implications",
        "S1 <=> S2 => S3 => S4 <=> S5, with S2 <=> S3 on RP(n) and S3 <=> S4 on S^n";
    "R-1.16", "Cor 1.16", "are all equivalent if the suspension homomorphism",
        "E injective: S1 ... S5 equivalent";
    "R-1.16b", "Prop 4.8", "are all equivalent to",
        "Einf injective or m <= n+3: S1 ... S5 equivalent to omega(f,f) = 0";
    "R-1.17-deg", "Ex 1.17", "(1+(-1)^n)d",
        "degree d selfmaps: E(boundary) = (1+(-1)^n) d";
    "R-1.17-hopf", "Ex 1.17", "H(f~) = 0(4)",
        "(m,n) = (11,6): boundary onto Z/2, E trivial";
    "R-E-trivial", "Ex 1.17", "E and hence E o d is trivial here",
        "trivial E forces E(boundary[f]) = 0";
    "R-1.20", "(1.20)", "omega#(f_1,f_2) = deg#(f_1-f_2)+omega#(f_2,f_2)",
        "general pairs reduce to a root pair and a selfpair";
    "R-1.21", "Thm 1.21", "Then omega#(f,f)=0 for all f",
        "w1 not injective: omega#(f,f) = 0, small deformation when m < 2n-2 or m <= n+3";
    "R-1.22", "Ex 1.22", "each pair of maps f_1,f_2 : S^m -> N is loose",
        "m = n even, orientable, pi1 = Z/2: every pair is loose";
    "R-1.23", "Ex 1.23", "hence omega#(f,f)=0 for all maps",
        "oriented Grassmannians of even r: omega#(f,f) = 0";
    "R-1.24", "Prop 1.24", "if j_* o d([f]) vanishes then so does omega#(f,f)",
        "j_* boundary[f] = 0 with pi1 nontrivial: omega#(f,f) = 0";
    "R-1.25", "Cor 1.25", "the following restrictions must all be satisfied",
        "a failed necessary condition forces omega#(f,f) = 0";
    "R-1.26", "Ex 1.26", "there exist infinitely many homotopy classes",
        "RP(n), m = 2n-1, n in {4,8,12,14,16,20}: some omega#(f,f) != 0";
    "R-1.28", "Ex 1.28", "is trivial for m <= 10",
        "coll_* : pi_m(N) -> pi_m(S^n) triviality";
    "R-3.15", "(3.15)", "are the stabilized versions of",
        "omega# = 0 => omega~ = 0 => omega = 0";
    "R-4.1", "(4.1)", "omega#(f,f)=s_*(omega_0#(f,f))",
        "selfpairs: only the trivial Nielsen class contributes";
    "R-4.6", "Cor 4.6", "such that omega#(f,f) != 0 but omega~(f,f)=0",
        "existence of a selfmap with omega# != 0 and omega~ = 0";
    "R-4.8", "Prop 4.8", "omega(f,f) = chi(N) omega(f,y_0)",
        "evaluation of omega(f,f)";
    "R-4.9", "Prop 4.9", "(chi(N)-1) omega(f_1,f_2) = 0",
        "annihilation of omega(f_1,f_2) by chi(N) or chi(N)-1";
    "R-EX", "(1.11)", "is very often exact",
        "existence of a root pair with deg# != 0";
    "R-1.30", "Thm 1.30", "if and only if",
        "N# = 0 <=> omega# = 0 and N = 0 <=> omega~ = 0";
    "R-1.31", "Thm 1.31", "may assume only the two values 0 or k",
        "Nielsen numbers lie in {0, k}, or {0, 1, 2} in the exceptional case";
    "R-3.12", "Prop 3.12", "omega_A#(f,y_0)=rho_A*(omega_0#(f,y_0))",
        "root pairs: all Nielsen classes behave alike";
    "R-NS", "Thm 1.31", "equals 0,1 and 2, resp.",
        "RP(n), m = n even: Nielsen numbers of (y0,y0), (p,p), (p,y0)";
}

pub fn rule(id: &str) -> Option<&'static RuleInfo> {
    RULES.iter().find(|r| r.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_unique_and_quoted() {
        let ids: BTreeSet<_> = RULES.iter().map(|r| r.id).collect();
        assert_eq!(ids.len(), RULES.len());
        assert!(RULES.iter().all(|r| !r.quote.is_empty() && !r.citation.is_empty()));
    }
}
