"""Full spectral analysis of one periodic state."""
from dataclasses import dataclass, field

from boxball.automata import pbbs_trajectory, soliton_content
from boxball.core import reduce_mod_lattice, vec_sub, vector
from boxball.curve import (
    abel_jacobi,
    build_curve,
    candidate_assignments,
    corner_locus,
    compare_loci,
    curve_document,
    curve_locus,
    rational,
    riemann_constant,
)
from boxball.errors import DomainError, VerificationError
from boxball.spectral import abel_jacobi_sum, build_matrix, char_poly, divisor_points
from boxball.theta import ThetaContext, u_from_theta


@dataclass
class SpectralReport:
    state: object
    curve: object
    points: list
    refs: list = field(default_factory=list)
    images: list = field(default_factory=list)
    aj_sum: tuple = ()
    c0_raw: tuple = ()
    c0: tuple = ()
    locus_mismatch: tuple = ((), ())
    context: ThetaContext | None = None

    @property
    def genus(self):
        return self.curve.genus

    def to_document(self):
        doc = curve_document(self.curve)
        doc["state"] = str(self.state)
        doc["genus"] = self.genus
        doc["divisor_points"] = [
            {
                "X": rational(p.X),
                "Y": rational(p.Y),
                "segment": str(ref) if ref is not None else None,
                "abel_jacobi": [rational(x) for x in image],
            }
            for p, ref, image in zip(self.points, self.refs or [None] * len(self.points), self.images or [()] * len(self.points))
        ]
        doc["c0"] = [rational(x) for x in self.c0]
        doc["c0_unreduced"] = [rational(x) for x in self.c0_raw]
        return doc


def _reproduces(ctx, rows):
    try:
        return all(u_from_theta(ctx, n, t) == row.value(n) for t, row in enumerate(rows) for n in range(ctx.L))
    except VerificationError:
        return False


def choose_assignment(a, state, curve, points):
    """
    Edge assignment of the divisor points whose c₀ reproduces the first two
    steps of `state`; only points shared by equal solitons have a choice.
    """
    candidates = candidate_assignments(points, curve)
    first = next(candidates)
    rest = list(candidates)
    if not rest:
        return first
    base = ThetaContext.from_curve(curve, tuple(0 for _ in curve.solitons))
    kappa = riemann_constant(curve)
    rows = pbbs_trajectory(state, 1)
    seen = set()
    for refs in [first] + rest:
        c0 = reduce_mod_lattice(vec_sub(kappa, abel_jacobi_sum(points, curve, refs)), base.B, base.factor)[0]
        if c0 in seen:
            continue
        seen.add(c0)
        if _reproduces(base.with_c0(c0), rows):
            a.logger.debug(f"Edge assignment {[str(r) for r in refs]} chosen from {len(rest) + 1} candidate(s)")
            return refs
    a.logger.warning(f"No edge assignment of the divisor of {state} reproduces the automaton; "
                     f"keeping the round-robin one")
    return first


def divisor_of(a, state, m, curve):
    """Divisor points, their curve references and the unreduced Abel–Jacobi sum."""
    points = divisor_points(m, a.depth, a.settings)
    # the remaining points of the divisor sit at O or on σ₁
    if len(points) > curve.genus:
        raise DomainError(f"{len(points)} divisor point(s) at Y > 0 exceed the genus {curve.genus} "
                          f"({', '.join(str(p) for p in points)})")
    refs = choose_assignment(a, state, curve, points)
    return points, refs, abel_jacobi_sum(points, curve, refs)


def analyze_state(a, state, c0_override=None):
    """Curve, divisor, c₀ and theta context of a periodic state."""
    solitons = soliton_content(state)
    curve = build_curve(solitons, state.L)
    a.logger.info(f"State {state}: L={state.L}, solitons={list(solitons)}")
    m = build_matrix(state)
    phi = char_poly(m)
    mismatch = compare_loci(corner_locus(phi), curve_locus(curve))
    if mismatch[0] or mismatch[1]:
        a.logger.warning(f"Corner locus differs from the explicit curve: missing={mismatch[0]} extra={mismatch[1]}")
    report = SpectralReport(state, curve, [], locus_mismatch=mismatch)
    if curve.genus == 0:
        report.context = ThetaContext.from_curve(curve, ())
        return report

    points, refs, aj_sum = divisor_of(a, state, m, curve)
    report.points = points
    report.refs = refs
    report.images = [abel_jacobi(ref, curve) for ref in refs]
    report.aj_sum = aj_sum
    ctx = ThetaContext.from_curve(curve, tuple(0 for _ in solitons))
    report.c0_raw = vec_sub(riemann_constant(curve), report.aj_sum)
    report.c0 = reduce_mod_lattice(report.c0_raw, ctx.B, ctx.factor)[0]
    if c0_override is not None:
        a.logger.warning(f"c0 overridden: {list(c0_override)} in place of {list(report.c0)}")
        report.c0 = vector(c0_override)
    report.context = ctx.with_c0(report.c0)
    a.logger.info(f"Divisor points {[str(p) for p in points]}, c0={[str(x) for x in report.c0]}")
    return report
