use clap::ValueEnum;

/// Which family of instances a claim is indexed by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Range {
    /// Indexed by the positive integer `n` of the cyclotomic modulus.
    N,
    /// Indexed by a prime `p`.
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Claim {
    Thm1,
    Thm2,
    GuoA,
    GuoB,
    WeiBb,
    WeiCc,
    Units,
    Factorizations,
    WeiDd,
    Lhopital,
    WhippleA,
    WhippleB,
    Hamme,
    Long,
    WeiFull,
    Corollary,
    Prop1,
    WangPan,
    Sun,
    Reflection,
    All,
}

impl Claim {
    /// Every concrete claim, in listing order.
    pub const CONCRETE: [Claim; 20] = [
        Claim::Thm1,
        Claim::Thm2,
        Claim::GuoA,
        Claim::GuoB,
        Claim::WeiBb,
        Claim::WeiCc,
        Claim::Units,
        Claim::Factorizations,
        Claim::WeiDd,
        Claim::Lhopital,
        Claim::WhippleA,
        Claim::WhippleB,
        Claim::Hamme,
        Claim::Long,
        Claim::WeiFull,
        Claim::Corollary,
        Claim::Prop1,
        Claim::WangPan,
        Claim::Sun,
        Claim::Reflection,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Thm1 => "thm1",
            Claim::Thm2 => "thm2",
            Claim::GuoA => "guo-a",
            Claim::GuoB => "guo-b",
            Claim::WeiBb => "wei-bb",
            Claim::WeiCc => "wei-cc",
            Claim::Units => "units",
            Claim::Factorizations => "factorizations",
            Claim::WeiDd => "wei-dd",
            Claim::Lhopital => "lhopital",
            Claim::WhippleA => "whipple-a",
            Claim::WhippleB => "whipple-b",
            Claim::Hamme => "hamme",
            Claim::Long => "long",
            Claim::WeiFull => "wei-full",
            Claim::Corollary => "corollary",
            Claim::Prop1 => "prop1",
            Claim::WangPan => "wang-pan",
            Claim::Sun => "sun",
            Claim::Reflection => "reflection",
            Claim::All => "all",
        }
    }

    pub fn range(self) -> Range {
        match self {
            Claim::Hamme
            | Claim::Long
            | Claim::WeiFull
            | Claim::Corollary
            | Claim::Prop1
            | Claim::WangPan
            | Claim::Sun
            | Claim::Reflection => Range::P,
            _ => Range::N,
        }
    }

    /// Whether instances draw random parameter specializations.
    pub fn is_sampled(self) -> bool {
        matches!(
            self,
            Claim::Thm2
                | Claim::WeiBb
                | Claim::WeiCc
                | Claim::Units
                | Claim::Factorizations
                | Claim::WeiDd
                | Claim::WhippleA
                | Claim::WhippleB
        )
    }

    pub fn describe(self) -> &'static str {
        match self {
            Claim::Thm1 => "central q-sum ≡ q^{(n-1)/2}A{1 + 2[n]²Σ} (mod Φ_n(q)³), n ≡ 1 (mod 4)",
            Claim::Thm2 => "two-parameter sum ≡ Ω_n(a,b) (mod (1-aq^n)(a-q^n)(b-q^n)), n ≡ 1 (mod 4)",
            Claim::GuoA => "central q-sum (mod Φ_n(q)²), both branches, n odd",
            Claim::GuoB => "central q-sum ≡ [n](q³;q⁴)/(q⁵;q⁴) (mod Φ_n(q)³), n ≡ 3 (mod 4)",
            Claim::WeiBb => "two-parameter sum (mod (1-aq^n)(a-q^n))",
            Claim::WeiCc => "two-parameter sum (mod b-q^n)",
            Claim::Units => "CRT unit coefficients ≡ 1 modulo their factors, n odd",
            Claim::Factorizations => "three product rewritings (mod b-q^n)",
            Claim::WeiDd => "b → 1 congruence (mod Φ_n(q)(1-aq^n)(a-q^n))",
            Claim::Lhopital => "a → 1 limit of the braced difference at q0 ∈ {2/3, 5/7, -3/4}",
            Claim::WhippleA => "Andrews' q-Whipple identity",
            Claim::WhippleB => "Jain's q-Whipple identity",
            Claim::Hamme => "Σ(1/2)_k³/k!³ ≡ -Γ_p(1/4)⁴ or 0 (mod p²)",
            Claim::Long => "Σ(1/2)_k³/k!³ ≡ -Γ_p(1/4)⁴ or -(p²/16)Γ_p(1/4)⁴ (mod p³)",
            Claim::WeiFull => "Σ(1/2)_k³/k!³ with both harmonic corrections (mod p³), p ≡ 1 (mod 4)",
            Claim::Corollary => "Σ(1/2)_k³/k!³ with the H_{(p-1)/4} correction (mod p³), p ≡ 1 (mod 4)",
            Claim::Prop1 => "harmonic-corrected quotient ≡ -Γ_p(1/4)⁴ (mod p³), p ≡ 1 (mod 4)",
            Claim::WangPan => "H_{(p-1)/4} ≡ Γ_p''/Γ_p - (Γ_p'/Γ_p)² at 1/4 (mod p), p ≡ 1 (mod 4)",
            Claim::Sun => "H_{(p-1)/2} ≡ 0 (mod p), p > 3",
            Claim::Reflection => "Γ_p rewriting and second-order expansion (mod p³), p ≡ 1 (mod 4)",
            Claim::All => "every claim above",
        }
    }

    pub fn expand(self) -> Vec<Claim> {
        if self == Claim::All {
            Self::CONCRETE.to_vec()
        } else {
            vec![self]
        }
    }
}
