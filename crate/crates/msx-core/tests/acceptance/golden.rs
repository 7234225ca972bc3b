//! Frozen expected values for the regression suites: the two scalar-product
//! tables and the three unit-matrix tables, entry by entry. Scalars use the
//! crate's canonical wire form.

/// Tokens indexing the 4×4 scalar-product table.
pub const SCALAR_G8_TOKENS: [&str; 4] = ["I", "Z", "C1", "C2"];

/// ⟨row|col⟩ over {I, Z, C₁, C₂}.
pub const SCALAR_G8: [[&str; 4]; 4] = [
    ["2", "0", "1-i", "1+i"],
    ["0", "2", "1+i", "1-i"],
    ["1+i", "1-i", "2", "0"],
    ["1-i", "1+i", "0", "2"],
];

/// Tokens indexing the 8×8 scalar-product table.
pub const SCALAR_GCP_TOKENS: [&str; 8] = ["I", "X", "Y", "Z", "C1", "C2", "S1", "S2"];

/// ⟨row|col⟩ over the eight representatives of G_cp.
pub const SCALAR_GCP: [[&str; 8]; 8] = [
    ["2", "0", "0", "0", "1-i", "1+i", "0", "0"],
    ["0", "2", "0", "0", "0", "0", "1-i", "1+i"],
    ["0", "0", "2", "0", "0", "0", "-1+i", "1+i"],
    ["0", "0", "0", "2", "1+i", "1-i", "0", "0"],
    ["1+i", "0", "0", "1-i", "2", "0", "0", "0"],
    ["1-i", "0", "0", "1+i", "0", "2", "0", "0"],
    ["0", "1+i", "-1-i", "0", "0", "0", "2", "0"],
    ["0", "1-i", "1-i", "0", "0", "0", "0", "2"],
];

/// One golden unit record: (set, context label, pair, displayed sum matrix,
/// whether both summands lie in G₈).
pub type UnitGolden = (u8, &'static str, &'static str, &'static str, bool);

/// All 96 unit matrices in table order: set 1, then set 2, then set 3.
pub const UNIT_GOLDEN: [UnitGolden; 96] = [
    // Set 1, context label 1: hermitian sums of orthogonal contexts.
    (1, "1", "I+X", "[[1,1],[1,1]]", false),
    (1, "1", "I+Y", "[[1,-i],[i,1]]", false),
    (1, "1", "I+Z", "[[2,0],[0,0]]", true),
    (1, "1", "I-X", "[[1,-1],[-1,1]]", false),
    (1, "1", "I-Y", "[[1,i],[-i,1]]", false),
    (1, "1", "I-Z", "[[0,0],[0,2]]", true),
    (1, "1", "C1+C2", "[[2,0],[0,0]]", true),
    (1, "1", "iC1-iC2", "[[0,0],[0,2]]", false),
    (1, "1", "-I+X", "[[-1,1],[1,-1]]", false),
    (1, "1", "-I+Y", "[[-1,-i],[i,-1]]", false),
    (1, "1", "-I+Z", "[[0,0],[0,-2]]", true),
    (1, "1", "-I-X", "[[-1,-1],[-1,-1]]", false),
    (1, "1", "-I-Y", "[[-1,i],[-i,-1]]", false),
    (1, "1", "-I-Z", "[[-2,0],[0,0]]", true),
    (1, "1", "-C1-C2", "[[-2,0],[0,0]]", true),
    (1, "1", "-iC1+iC2", "[[0,0],[0,-2]]", false),
    // Set 1, context label −1: anti-hermitian sums of orthogonal contexts.
    (1, "-1", "iI+iX", "[[i,i],[i,i]]", false),
    (1, "-1", "iI+iY", "[[i,1],[-1,i]]", false),
    (1, "-1", "iI+iZ", "[[2i,0],[0,0]]", false),
    (1, "-1", "iI-iX", "[[i,-i],[-i,i]]", false),
    (1, "-1", "iI-iY", "[[i,-1],[1,i]]", false),
    (1, "-1", "iI-iZ", "[[0,0],[0,2i]]", false),
    (1, "-1", "-C1+C2", "[[0,0],[0,2i]]", true),
    (1, "-1", "iC1+iC2", "[[2i,0],[0,0]]", false),
    (1, "-1", "-iI+iX", "[[-i,i],[i,-i]]", false),
    (1, "-1", "-iI+iY", "[[-i,1],[-1,-i]]", false),
    (1, "-1", "-iI+iZ", "[[0,0],[0,-2i]]", false),
    (1, "-1", "-iI-iX", "[[-i,-i],[-i,-i]]", false),
    (1, "-1", "-iI-iY", "[[-i,-1],[1,-i]]", false),
    (1, "-1", "-iI-iZ", "[[-2i,0],[0,0]]", false),
    (1, "-1", "C1-C2", "[[0,0],[0,-2i]]", true),
    (1, "-1", "-iC1-iC2", "[[-2i,0],[0,0]]", false),
    // Set 2, context label i: orthogonal contexts, eigenvalue ∝ 1+i.
    (2, "i", "S2+C2", "[[1,1],[i,i]]", false),
    (2, "i", "-S2+C2", "[[1,-1],[-i,i]]", false),
    (2, "i", "S2-C2", "[[-1,1],[i,-i]]", false),
    (2, "i", "-S2-C2", "[[-1,-1],[-i,-i]]", false),
    (2, "i", "iS1+C2", "[[1,i],[1,i]]", false),
    (2, "i", "-iS1-C2", "[[-1,-i],[-1,-i]]", false),
    (2, "i", "iS1-C2", "[[-1,i],[1,-i]]", false),
    (2, "i", "-iS1+C2", "[[1,-i],[-1,i]]", false),
    (2, "i", "iS1+iC1", "[[i,i],[1,1]]", false),
    (2, "i", "-iS1-iC1", "[[-i,-i],[-1,-1]]", false),
    (2, "i", "-iS1+iC1", "[[i,-i],[-1,1]]", false),
    (2, "i", "iS1-iC1", "[[-i,i],[1,-1]]", false),
    (2, "i", "S2+iC1", "[[i,1],[i,1]]", false),
    (2, "i", "-S2+iC1", "[[i,-1],[-i,1]]", false),
    (2, "i", "S2-iC1", "[[-i,1],[i,-1]]", false),
    (2, "i", "-S2-iC1", "[[-i,-1],[-i,-1]]", false),
    // Set 2, context label −i: orthogonal contexts, eigenvalue ∝ 1−i.
    (2, "-i", "S1+C1", "[[1,1],[-i,-i]]", false),
    (2, "-i", "-S1-C1", "[[-1,-1],[i,i]]", false),
    (2, "-i", "S1-C1", "[[-1,1],[-i,i]]", false),
    (2, "-i", "-S1+C1", "[[1,-1],[i,-i]]", false),
    (2, "-i", "iS2+C1", "[[1,i],[-1,-i]]", false),
    (2, "-i", "iS2-C1", "[[-1,i],[-1,i]]", false),
    (2, "-i", "-iS2+C1", "[[1,-i],[1,-i]]", false),
    (2, "-i", "-iS2-C1", "[[-1,-i],[1,i]]", false),
    (2, "-i", "iS2+iC2", "[[i,i],[-1,-1]]", false),
    (2, "-i", "-iS2-iC2", "[[-i,-i],[1,1]]", false),
    (2, "-i", "-iS2+iC2", "[[i,-i],[1,-1]]", false),
    (2, "-i", "iS2-iC2", "[[-i,i],[-1,1]]", false),
    (2, "-i", "S1+iC2", "[[i,1],[-i,-1]]", false),
    (2, "-i", "-S1-iC2", "[[-i,-1],[i,1]]", false),
    (2, "-i", "S1-iC2", "[[-i,1],[-i,1]]", false),
    (2, "-i", "-S1+iC2", "[[i,-1],[i,-1]]", false),
    // Set 3, context label i: diagonal sums of non-orthogonal contexts.
    (3, "i", "I-C1", "[[0,0],[0,1+i]]", true),
    (3, "i", "-I+C1", "[[0,0],[0,-1-i]]", true),
    (3, "i", "I+iC2", "[[1+i,0],[0,0]]", false),
    (3, "i", "-I-iC2", "[[-1-i,0],[0,0]]", false),
    (3, "i", "iI+C1", "[[1+i,0],[0,0]]", false),
    (3, "i", "-iI-C1", "[[-1-i,0],[0,0]]", false),
    (3, "i", "iI-iC2", "[[0,0],[0,1+i]]", false),
    (3, "i", "-iI+iC2", "[[0,0],[0,-1-i]]", false),
    (3, "i", "Z-C2", "[[0,0],[0,-1-i]]", true),
    (3, "i", "-Z+C2", "[[0,0],[0,1+i]]", true),
    (3, "i", "-Z-iC1", "[[-1-i,0],[0,0]]", false),
    (3, "i", "Z+iC1", "[[1+i,0],[0,0]]", false),
    (3, "i", "iZ+C2", "[[1+i,0],[0,0]]", false),
    (3, "i", "-iZ-C2", "[[-1-i,0],[0,0]]", false),
    (3, "i", "iZ-iC1", "[[0,0],[0,-1-i]]", false),
    (3, "i", "-iZ+iC1", "[[0,0],[0,1+i]]", false),
    // Set 3, context label −i.
    (3, "-i", "I-C2", "[[0,0],[0,1-i]]", true),
    (3, "-i", "-I+C2", "[[0,0],[0,-1+i]]", true),
    (3, "-i", "I-iC1", "[[1-i,0],[0,0]]", false),
    (3, "-i", "-I+iC1", "[[-1+i,0],[0,0]]", false),
    (3, "-i", "iI-C2", "[[-1+i,0],[0,0]]", false),
    (3, "-i", "-iI+C2", "[[1-i,0],[0,0]]", false),
    (3, "-i", "iI-iC1", "[[0,0],[0,-1+i]]", false),
    (3, "-i", "-iI+iC1", "[[0,0],[0,1-i]]", false),
    (3, "-i", "Z-C1", "[[0,0],[0,-1+i]]", true),
    (3, "-i", "-Z+C1", "[[0,0],[0,1-i]]", true),
    (3, "-i", "-Z+iC2", "[[-1+i,0],[0,0]]", false),
    (3, "-i", "Z-iC2", "[[1-i,0],[0,0]]", false),
    (3, "-i", "iZ-C1", "[[-1+i,0],[0,0]]", false),
    (3, "-i", "-iZ+C1", "[[1-i,0],[0,0]]", false),
    (3, "-i", "iZ-iC2", "[[0,0],[0,1-i]]", false),
    (3, "-i", "-iZ+iC2", "[[0,0],[0,-1+i]]", false),
];

/// Split a pair name like `iC1-iC2` or `-I+C1` into its two summand tokens,
/// folding the middle sign into the second token.
pub fn split_pair(name: &str) -> (String, String) {
    let body = name.strip_prefix('-').unwrap_or(name);
    let offset = name.len() - body.len();
    let sep = body
        .char_indices()
        .find(|&(_, c)| c == '+' || c == '-')
        .map(|(idx, _)| idx + offset)
        .expect("pair names contain a separator sign");
    let first = &name[..sep];
    let (sign, second) = (&name[sep..sep + 1], &name[sep + 1..]);
    let second = if sign == "-" {
        format!("-{second}")
    } else {
        second.to_string()
    };
    (first.to_string(), second)
}
