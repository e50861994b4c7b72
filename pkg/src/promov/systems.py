"""Inverse systems, morphisms of inverse systems, and their calculus.

Finite-poset systems carry full bond tables and are checked exactly.
Sequence systems (over the natural-number chain) carry generator rules for
objects and step bonds; composite bonds are derived and cached, and all
judgments about them are horizon-bounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import categories as cat
from .categories import BackendError, Morphism, Object, compose, identity, morphisms_equal
from .indexsets import (
    NAT,
    FiniteDirectedPoset,
    IndexMap,
    IndexSet,
    is_finite_index,
    upper_bound,
)


@dataclass(frozen=True)
class SystemFlags:
    """Declared structural facts used by stabilization rules (spot-verified
    by validate_system up to the working horizon, never assumed silently)."""

    all_bondings_epimorphic: bool = False
    eventually_periodic: Optional[tuple] = None  # (offset, period)


class InverseSystem:
    """Objects X_lambda with bonds p[lam, lam'] : X_{lam'} -> X_lam.

    Finite posets: pass ``objects`` (label -> object) and ``bonds``
    ((lo, hi) -> morphism) for every comparable pair.  Sequences: pass
    ``object_rule`` (n -> object) and ``step_rule`` (n -> morphism
    X_{n+1} -> X_n).
    """

    def __init__(self, index: IndexSet, *, objects=None, bonds=None,
                 object_rule: Callable = None, step_rule: Callable = None,
                 flags: SystemFlags = SystemFlags(), name: str = ""):
        self.index = index
        self.flags = flags
        self.name = name
        if is_finite_index(index):
            if objects is None or bonds is None:
                raise ValueError("finite-poset systems need objects and bonds tables")
            self._objects = dict(objects)
            self._bonds = dict(bonds)
            self._object_rule = None
            self._step_rule = None
        else:
            if object_rule is None or step_rule is None:
                raise ValueError("sequence systems need object and step rules")
            self._objects = {}
            self._bonds = {}
            self._object_rule = object_rule
            self._step_rule = step_rule

    def object_at(self, lam) -> Object:
        if self._object_rule is not None:
            if lam not in self._objects:
                self._objects[lam] = self._object_rule(lam)
            return self._objects[lam]
        return self._objects[lam]

    def bond(self, lo, hi) -> Morphism:
        """p_{lo,hi} : X_hi -> X_lo, for lo <= hi."""
        if not self.index.leq(lo, hi):
            raise ValueError(f"bond requested for non-comparable pair ({lo!r}, {hi!r})")
        if lo == hi:
            # finite tables may carry (possibly wrong) diagonal entries that
            # validate_system must be able to see
            if self._step_rule is None and (lo, hi) in self._bonds:
                return self._bonds[(lo, hi)]
            return identity(self.object_at(lo))
        if self._step_rule is not None:
            key = (lo, hi)
            if key not in self._bonds:
                # p_{lo,hi} = p_{lo,hi-1} o step(hi-1)
                self._bonds[key] = compose(self.bond(lo, hi - 1), self._step_rule(hi - 1))
            return self._bonds[key]
        return self._bonds[(lo, hi)]

    def indices(self, horizon: int):
        """Index range for horizon-bounded loops: all elements of a finite
        poset, or 0..horizon on the chain."""
        if is_finite_index(self.index):
            return list(self.index.members())
        return list(range(horizon + 1))

    def is_sequence(self) -> bool:
        return not is_finite_index(self.index)

    def top(self, horizon: int):
        """Greatest in-range index: poset greatest element, or the horizon."""
        if is_finite_index(self.index):
            return self.index.greatest()
        return horizon


class SystemMorphism:
    """(f_mu, phi) : X -> Y, with phi from Y's indices to X's and
    f_mu : X_{phi(mu)} -> Y_mu."""

    def __init__(self, source: InverseSystem, target: InverseSystem,
                 phi: IndexMap, component: Callable, name: str = ""):
        self.source = source
        self.target = target
        self.phi = phi
        self._component = component
        self.name = name

    def f(self, mu) -> Morphism:
        return self._component(mu)


class ConeMorphism:
    """A compatible family of legs from one object into every stage of a
    system: leg(mu) : source -> Y_mu with q_{mu1 mu2} o leg(mu2) = leg(mu1)."""

    def __init__(self, source: Object, target: InverseSystem, leg: Callable):
        self.source = source
        self.target = target
        self._leg = leg

    def leg(self, mu) -> Morphism:
        return self._leg(mu)

    def validate(self, horizon: int) -> list:
        out = []
        idx = self.target.index
        for m1 in self.target.indices(horizon):
            for m2 in self.target.indices(horizon):
                if m1 != m2 and idx.leq(m1, m2):
                    lhs = compose(self.target.bond(m1, m2), self.leg(m2))
                    if not morphisms_equal(lhs, self.leg(m1)):
                        out.append(f"cone leg incompatibility at ({m1!r}, {m2!r})")
        return out


# ---------------------------------------------------------------------------
# validation


def validate_system(x: InverseSystem, horizon: int = 8) -> list:
    """Identity and functoriality of the bonds; declared flags spot-checked.

    Exhaustive on finite posets; checked through the horizon on sequences
    (functoriality there holds by construction, steps being the generators).
    """
    out = []
    idx = x.index
    members = x.indices(horizon)
    for lam in members:
        b = x.bond(lam, lam)
        if not morphisms_equal(b, identity(x.object_at(lam))):
            out.append(f"bond p[{lam!r},{lam!r}] is not the identity")
    if is_finite_index(idx):
        for a in members:
            for b in members:
                if not idx.leq(a, b):
                    continue
                bond = x.bond(a, b)
                if bond.source != x.object_at(b) or bond.target != x.object_at(a):
                    out.append(f"bond p[{a!r},{b!r}] has wrong endpoints")
                    continue
                for c in members:
                    if idx.leq(b, c):
                        lhs = compose(x.bond(a, b), x.bond(b, c))
                        if not morphisms_equal(lhs, x.bond(a, c)):
                            out.append(f"functoriality violation at ({a!r},{b!r},{c!r})")
    else:
        for n in range(horizon):
            step = x.bond(n, n + 1)
            if step.source != x.object_at(n + 1) or step.target != x.object_at(n):
                out.append(f"step bond at {n} has wrong endpoints")
    if x.flags.all_bondings_epimorphic:
        pairs = ([(a, b) for a in members for b in members
                  if a != b and idx.leq(a, b)] if is_finite_index(idx)
                 else [(n, n + 1) for n in range(horizon)])
        for a, b in pairs:
            if not cat.is_epimorphism(x.bond(a, b)):
                out.append(f"declared epimorphic, but p[{a!r},{b!r}] is not epi")
    if x.flags.eventually_periodic is not None:
        off, per = x.flags.eventually_periodic
        if per < 1 or off < 0:
            out.append("eventually_periodic flag has invalid parameters")
        elif not x.is_sequence():
            out.append("eventually_periodic flag only applies to sequences")
        else:
            for n in range(off, horizon - per):
                if x.object_at(n) != x.object_at(n + per):
                    out.append(f"declared periodic, but objects differ at {n} vs {n + per}")
                    break
                s1, s2 = x.bond(n, n + 1), x.bond(n + per, n + per + 1)
                if not morphisms_equal(s1, s2):
                    out.append(f"declared periodic, but steps differ at {n} vs {n + per}")
                    break
    return out


def restrict(f: SystemMorphism, mu, lam) -> Morphism:
    """f_{mu lam} = f_mu o p_{phi(mu) lam}, defined for lam >= phi(mu)."""
    pm = f.phi(mu)
    if not f.source.index.leq(pm, lam):
        raise ValueError(f"restriction index {lam!r} is not >= phi({mu!r}) = {pm!r}")
    return compose(f.f(mu), f.source.bond(pm, lam))


def validate_morphism(f: SystemMorphism, horizon: int = 8,
                      lambda_horizon: int = None) -> list:
    """Component endpoints plus the coherence condition with the bonds.

    Coherence for (mu, mu'): some lam >= phi(mu), phi(mu') has
    f_{mu lam} = q_{mu mu'} o f_{mu' lam}.  Sequences check adjacent pairs
    (coherence composes up the chain), searching lam up to lambda_horizon
    (default 2*horizon + 1, deep enough for witnesses like lam = 2*mu + 1).
    """
    if lambda_horizon is None:
        lambda_horizon = 2 * horizon + 1
    out = []
    x, y = f.source, f.target
    for mu in y.indices(horizon):
        comp = f.f(mu)
        if comp.source != x.object_at(f.phi(mu)) or comp.target != y.object_at(mu):
            out.append(f"component at {mu!r} has wrong endpoints")
    if out:
        return out
    if is_finite_index(y.index):
        pairs = [(a, b) for a in y.indices(horizon) for b in y.indices(horizon)
                 if a != b and y.index.leq(a, b)]
    else:
        pairs = [(n, n + 1) for n in range(horizon)]
    for mu, mu2 in pairs:
        lam_candidates = _lams_above(x, f.phi(mu), f.phi(mu2), lambda_horizon)
        ok = False
        for lam in lam_candidates:
            lhs = restrict(f, mu, lam)
            rhs = compose(y.bond(mu, mu2), restrict(f, mu2, lam))
            if morphisms_equal(lhs, rhs):
                ok = True
                break
        if not ok:
            out.append(f"coherence failure at ({mu!r}, {mu2!r})")
    return out


def _lams_above(x: InverseSystem, a, b, horizon: int) -> list:
    """Ascending candidates lam >= a, b in X's index set, in range."""
    if is_finite_index(x.index):
        return [lam for lam in x.index.members()
                if x.index.leq(a, lam) and x.index.leq(b, lam)]
    lo = max(a, b)
    return list(range(lo, max(horizon, lo) + 1))


# ---------------------------------------------------------------------------
# the pro-category structure


def identity_morphism(x: InverseSystem) -> SystemMorphism:
    return SystemMorphism(x, x, IndexMap.identity(x.index),
                          lambda lam: identity(x.object_at(lam)),
                          name=f"1_{x.name}" if x.name else "identity")


def compose_morphisms(g: SystemMorphism, f: SystemMorphism) -> SystemMorphism:
    """(g_nu, psi) o (f_mu, phi) = (g_nu o f_{psi(nu)}, phi o psi)."""
    if g.source is not f.target and g.source != f.target:
        raise BackendError("composition endpoint mismatch")
    psi, phi = g.phi, f.phi
    chi = IndexMap(g.target.index, f.source.index,
                   rule=lambda nu: phi(psi(nu)), rule_name="composite")
    return SystemMorphism(f.source, g.target, chi,
                          lambda nu: compose(g.f(nu), f.f(psi(nu))),
                          name=f"{g.name}o{f.name}")


def are_equivalent(f: SystemMorphism, g: SystemMorphism,
                   mu_max: int = 6, lambda_max: int = 16) -> bool:
    """The pro-morphism equivalence: each mu admits lam' >= phi(mu), phi'(mu)
    with f_{mu lam'} = g_{mu lam'}.

    Exact on finite posets.  On sequences only the maximal in-range lam' is
    tested: equality at any smaller lam' propagates upward by composing both
    sides with a bond, so this is sound and horizon-complete.
    """
    if f.source != g.source or f.target != g.target:
        raise BackendError("equivalence requires identical endpoints")
    x, y = f.source, f.target
    for mu in y.indices(mu_max):
        cands = _lams_above(x, f.phi(mu), g.phi(mu), lambda_max)
        if x.is_sequence():
            cands = cands[-1:]
        if not any(morphisms_equal(restrict(f, mu, lam), restrict(g, mu, lam))
                   for lam in cands):
            return False
    return True


# ---------------------------------------------------------------------------
# convenience constructors


def backend_of(x: InverseSystem, horizon: int = 0) -> str:
    obj = x.object_at(x.indices(horizon)[0]) if x.indices(horizon) else None
    if isinstance(obj, cat.PointedFiniteSet):
        return "pointed_set"
    return "abelian"


def constant_bond_system(index: FiniteDirectedPoset, obj: Object,
                         name: str = "") -> InverseSystem:
    objects = {lam: obj for lam in index.members()}
    bonds = {}
    for a in index.members():
        for b in index.members():
            if index.leq(a, b):
                bonds[(a, b)] = identity(obj)
    return InverseSystem(index, objects=objects, bonds=bonds, name=name)
