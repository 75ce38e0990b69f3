"""Recognition of two-colored quasi-best match graphs by neighborhood axioms.

Each axiom has a witness scan that lists every violating vertex tuple in
lexicographic order, and (for N1 and N2) an independent set formulation
used to cross-check the scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import ColoredDigraph, GraphError, pairs

__all__ = [
    "Witness",
    "AxiomReport",
    "check_n1",
    "check_n2",
    "check_n3",
    "n1_holds_setform",
    "n2_holds_setform",
    "is_2qbmg",
    "is_color_sink_free",
    "render_report",
]


@dataclass(frozen=True, order=True)
class Witness:
    axiom: str
    vertices: tuple[str, ...]

    def render(self) -> str:
        body = ",".join(self.vertices)
        if self.axiom == "N1":
            return f"N1 [{body}]"
        if self.axiom == "N2":
            return f"N2 ({body})"
        return f"N3 {{{body}}}"


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[Witness, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def by_axiom(self, axiom: str) -> list[Witness]:
        return [w for w in self.violations if w.axiom == axiom]


def check_n1(g: ColoredDigraph, first_only: bool = False) -> list[Witness]:
    """All (N1)-configurations [u,t,w,v]: u->t, t->w, v->w with u, v non-adjacent."""
    found = []
    for u, v in permutations(g.vertices, 2):
        if g.adjacent(u, v):
            continue
        for t in sorted(g.out_neighbors(u)):
            for w in sorted(g.out_neighbors(t) & g.out_neighbors(v)):
                if len({u, t, w, v}) == 4:
                    found.append(Witness("N1", (u, t, w, v)))
                    if first_only:
                        return found
    return sorted(found)


def check_n2(g: ColoredDigraph, first_only: bool = False) -> list[Witness]:
    """All chains u->v->w->t whose closing arc (u,t) is missing."""
    found = []
    for u in g.vertices:
        nu = g.out_neighbors(u)
        for v in sorted(nu):
            for w in sorted(g.out_neighbors(v)):
                for t in sorted(g.out_neighbors(w) - nu):
                    found.append(Witness("N2", (u, v, w, t)))
                    if first_only:
                        return found
    return found


def check_n3(g: ColoredDigraph, first_only: bool = False) -> list[Witness]:
    """Unordered pairs whose out-neighborhoods overlap without nesting."""
    found = []
    for u, v in pairs(g.vertices):
        a, b = g.out_neighbors(u), g.out_neighbors(v)
        if a & b and not (a <= b or b <= a):
            found.append(Witness("N3", (u, v)))
            if first_only:
                return found
    return found


def _out_of_set(g: ColoredDigraph, vs) -> set[str]:
    acc: set[str] = set()
    for v in vs:
        acc |= g.out_neighbors(v)
    return acc


def n1_holds_setform(g: ColoredDigraph) -> bool:
    """N+(u) ∩ N+(N+(v)) = N+(v) ∩ N+(N+(u)) = ∅ for all independent u != v."""
    for u, v in pairs(g.vertices):
        if g.adjacent(u, v):
            continue
        nu, nv = g.out_neighbors(u), g.out_neighbors(v)
        if nu & _out_of_set(g, nv) or nv & _out_of_set(g, nu):
            return False
    return True


def n2_holds_setform(g: ColoredDigraph) -> bool:
    """N+(N+(N+(u))) ⊆ N+(u) for every vertex u."""
    for u in g.vertices:
        nu = g.out_neighbors(u)
        if not _out_of_set(g, _out_of_set(g, nu)) <= nu:
            return False
    return True


def _require_proper(g: ColoredDigraph) -> None:
    if any(g.color[v] not in (0, 1) for v in g.vertices):
        raise GraphError("colors must be 0 or 1")
    for a, b in g.arcs:
        if g.color[a] == g.color[b]:
            raise GraphError(f"arc ({a},{b}) joins two vertices of color {g.color[a]}")


def is_2qbmg(g: ColoredDigraph, first_only: bool = False) -> AxiomReport:
    _require_proper(g)
    violations = []
    for check in (check_n1, check_n2, check_n3):
        violations.extend(check(g, first_only))
        if first_only and violations:
            break
    return AxiomReport(tuple(violations))


def is_color_sink_free(g: ColoredDigraph) -> bool:
    return all(g.out_neighbors(v) for v in g.vertices)


def render_report(report: AxiomReport) -> list[str]:
    lines = [f"2qBMG: {report.verdict}"]
    lines.extend(w.render() for w in report.violations)
    return lines
