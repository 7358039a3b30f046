from cubictrace.algebra import canonical_algebra


def canonical_algebras(p):
    """One FpCubicAlgebra per splitting type, deterministic for each p."""
    return {name: canonical_algebra(p, name) for name in ("split", "mixed", "inert")}
