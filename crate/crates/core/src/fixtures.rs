//! Small named graphs in the DIMACS-like text format.

/// Triangle `{1,2,3}` joined completely to the two disjoint edges `45` and
/// `67`. The clique `{2,3}` of vertex 1 defines an orbit, yet its path
/// inequality is not facet-defining because the complement of
/// `G[{4,5,6,7}]` is a 4-cycle.
pub const ORBIT_NOT_FACET: &str = "\
p edge 7 17
e 1 2
e 2 3
e 1 3
e 6 2
e 6 1
e 6 3
e 7 1
e 7 2
e 7 3
e 6 7
e 1 5
e 1 4
e 5 4
e 2 4
e 2 5
e 3 4
e 3 5
";

pub const P3: &str = "p edge 3 2\ne 1 2\ne 2 3\n";

pub const C4: &str = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
