use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "composet",
    version,
    about = "Zeta and Möbius functions of generalized subword orders",
    long_about = "Words are comma-separated element names (e.g. 2,1,1,3 or a,b,b,a); \
                  an empty argument or ε is the empty word."
)]
pub struct Cli {
    /// chain:N, antichain:Q, lambda or file:PATH (JSON with `elements` and
    /// `covers`). Defaults to the chain on the largest letter given.
    #[arg(long, global = true)]
    pub poset: Option<String>,

    /// Grading used for series truncation and generating functions.
    #[arg(long, global = true, value_enum)]
    pub grading: Option<GradingArg>,

    /// Truncation bound for series.
    #[arg(long, global = true)]
    pub bound: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    pub output: OutputMode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GradingArg {
    Norm,
    Length,
}

impl From<GradingArg> for composet::Grading {
    fn from(g: GradingArg) -> Self {
        match g {
            GradingArg::Norm => composet::Grading::Norm,
            GradingArg::Length => composet::Grading::Length,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Normal,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    #[value(name = "Z")]
    Z,
    #[value(name = "M")]
    M,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenfunKind {
    #[value(name = "Znorm")]
    Znorm,
    #[value(name = "Mnorm")]
    Mnorm,
    #[value(name = "Zlen")]
    Zlen,
    #[value(name = "Mlen")]
    Mlen,
    #[value(name = "ZPnorm")]
    ZPnorm,
    #[value(name = "MPnorm")]
    MPnorm,
    /// Length generating function of ζ(u, ·) over the selected poset.
    #[value(name = "Zgen")]
    Zgen,
    /// Length generating function of μ(u, ·) over the selected rooted forest.
    #[value(name = "Mgen")]
    Mgen,
    #[value(name = "zetapow")]
    Zetapow,
    #[value(name = "am-bm")]
    AmBm,
    #[value(name = "fiterate")]
    Fiterate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Telescoping,
    SumIdentity,
    ClosedForms,
    OracleSuite,
    Displays,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// μ(U, W).
    Mobius {
        u: String,
        w: String,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// ζ^M(U, W), the number of multichains U = v_0 ≤ … ≤ v_M = W.
    ZetaPower { u: String, w: String, m: usize },
    /// The interval [U, W].
    Interval { u: String, w: String },
    /// Embeddings of U into W.
    Embeddings {
        u: String,
        w: String,
        /// Only normal embeddings, with defects (rooted forests).
        #[arg(long)]
        normal: bool,
    },
    /// Truncated Z(U) or M(U).
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        u: String,
    },
    /// The two-variable automaton for Z⊗ or M⊗ over the chain [N].
    Automaton {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[arg(long)]
        n: usize,
        /// List the arcs (the default).
        #[arg(long, conflicts_with = "accept")]
        dump: bool,
        /// Accepted series up to ℓ(w) ≤ L.
        #[arg(long, value_name = "L")]
        accept: Option<usize>,
    },
    /// Commutative generating functions.
    Genfun {
        #[arg(value_enum)]
        kind: GenfunKind,
        /// Letter multiplicities l_1,…,l_n.
        #[arg(long = "type", value_name = "L1,L2,...")]
        type_vector: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Also print this many power series coefficients past the constant.
        #[arg(long, value_name = "D")]
        taylor: Option<usize>,
    },
    /// Cross-checks with a pass/fail report.
    Verify {
        #[arg(value_enum)]
        check: VerifyKind,
        /// Chain size for telescoping.
        #[arg(long)]
        n: Option<usize>,
        /// Largest m (and k) for closed-forms and sum-identity.
        #[arg(long)]
        max: Option<usize>,
    },
    /// The μ(a^i, c^j) versus Chebyshev table over Λ.
    Lambda {
        #[arg(long, value_name = "J")]
        max: usize,
    },
}
