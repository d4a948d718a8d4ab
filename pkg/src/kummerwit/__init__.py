"""kummerwit: exact computer algebra over F_q(s) and its root towers.

Subpackages and modules map to the library's functional areas:

- base_algebra: finite fields, polynomials, rational functions, places,
  valuations, residue fields, factorization in s -> s^(1/r) towers;
- characters: Dirichlet characters with exact cyclotomic sums and the
  balanced-residue predicate;
- rank_engine: prime search and the divisor-sum rank formula for the
  curves y^2 = x(x+1)(x+t^N) over constant-field/tower extensions;
- kummer_local: local case analysis of degree-l radical extensions and a
  valuation-descent simulator through three-step adjunction towers;
- curve_ff: the curve family over F_q(s) with exact group law, torsion
  certification, bounded point search and a tower stabilization probe;
- family: the definable family C_lambda and its cardinality growth;
- witnesses: comaximality and injection witnesses with independent
  verifiers, finite-set addition/multiplication graphs, axiom instances.
"""

__version__ = "0.1.0"
