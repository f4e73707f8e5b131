"""Independent reference computations shared by the test modules."""

from mcurve_schemes import ComplexScheme, check_all, format_canonical


def brute_force(p, alpha):
    """Every (eps, a+, b+) candidate, filtered by check_all alone."""
    beta = p.g - 1 - alpha
    out = set()
    for eps in (1, -1):
        for ap in range(alpha + 1):
            for bp in range(beta + 1):
                cs = ComplexScheme(eps, ap, alpha - ap, bp, beta - bp)
                if check_all(cs, p).arithmetically_admissible:
                    out.add(format_canonical(cs))
    return out
