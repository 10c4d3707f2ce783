"""Exact leading-term calculus for products of cyclotomic and gamma factors.

Expressions are finite products of three factor kinds in one complex
variable s:

* ``Cyclotomic(a, b, c)`` is (1 - c q^(-(a s + b))) with rational a, b and a
  unit-norm constant c (1 unless stated otherwise);
* ``GammaSym`` is an abstract local factor gamma(a s + b, rep, r_i, psi or
  its conjugate) about which only declared pole and zero orders are known;
* ``ConstSym`` carries log q, 2 pi, or a rational scalar.

Coefficients of leading Laurent terms live in a normalized product ring over
Q generated by log q, powers q^r with rational r, values (1 - q^(-x)),
opaque gamma values and residues, and unimodular units.  Equality is literal
equality of the normal form, so every cancellation claim is decidable.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import InputError, StructureError

# ---------------------------------------------------------------------------
# factors


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Cyclotomic:
    """(1 - c * q^(-(a s + b)))^exponent."""

    a: Fraction
    b: Fraction
    c: object = 1
    exponent: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if self.a == 0 and self.b == 0 and self.c == 1:
            raise InputError("identically zero cyclotomic factor")


@dataclass(frozen=True)
class GammaSym:
    """gamma(a s + b, rep, r_index, psi)^exponent; conj marks the psi-bar form."""

    rep: str
    index: int
    conj: bool
    a: Fraction
    b: Fraction
    exponent: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))


@dataclass(frozen=True)
class ConstSym:
    """A constant factor: "logq", "2pi", the parameter "j", or a rational
    literal like "3/2"."""

    name: str
    exponent: int = 1


def _linear_str(a, b, var="s"):
    a, b = _frac(a), _frac(b)
    if a == 0:
        return str(b)
    if a == 1:
        head = var
    elif a == -1:
        head = f"-{var}"
    else:
        head = f"{a}{var}"
    if b == 0:
        return head
    return f"{head} + {b}" if b > 0 else f"{head} - {-b}"


def factor_str(f):
    if isinstance(f, Cyclotomic):
        inner = _linear_str(-f.a, -f.b)
        cpart = "" if f.c == 1 else f"{f.c} "
        body = f"(1 - {cpart}q^({inner}))"
    elif isinstance(f, GammaSym):
        psi = "psibar" if f.conj else "psi"
        body = f"gamma({_linear_str(f.a, f.b)}, {f.rep}, r_{f.index}, {psi})"
    elif isinstance(f, ConstSym):
        body = {"logq": "log q", "2pi": "2 pi"}.get(f.name, f.name)
    else:
        raise InputError(f"unknown factor {f!r}")
    return body if f.exponent == 1 else f"{body}^{f.exponent}"


def expr_str(expr):
    return " * ".join(factor_str(f) for f in expr) if expr else "1"


def rescale(expr, lam):
    """Substitute s -> lam s in every factor.

    Residues transform accordingly: the residue of the rescaled expression
    at s0/lam is 1/lam times the residue of the original at s0.
    """
    lam = _frac(lam)
    if lam == 0:
        raise InputError("rescale factor must be nonzero")
    out = []
    for f in expr:
        if isinstance(f, (Cyclotomic, GammaSym)):
            out.append(replace(f, a=f.a * lam))
        else:
            out.append(f)
    return tuple(out)


# ---------------------------------------------------------------------------
# analytic declarations for gamma symbols


@dataclass(frozen=True)
class GammaAxioms:
    """Declared pole/zero orders of the abstract gamma factors.

    Each declaration is (rep, index, point, order); positive order means a
    pole.  Undeclared points default to regular and nonzero.  Conjugate
    (psi-bar) factors share the declarations of their psi partners and their
    values are identified up to a unimodular unit when absolute values are
    taken.
    """

    declarations: tuple = ()

    def __post_init__(self):
        seen = {}
        fixed = []
        for rep, index, point, order in self.declarations:
            key = (rep, index, _frac(point))
            if key in seen and seen[key] != order:
                raise InputError(f"conflicting orders declared at {key}")
            seen[key] = order
            fixed.append((rep, index, _frac(point), int(order)))
        object.__setattr__(self, "declarations", tuple(fixed))

    @staticmethod
    def pole_on(index, rep="sigma", point=1):
        """The standard hypothesis: one simple pole at the given point."""
        return GammaAxioms(((rep, index, _frac(point), 1),))

    def order_at(self, rep, index, point):
        """Vanishing order (negative of the declared pole order) at a point."""
        for r, i, p, order in self.declarations:
            if (r, i, p) == (rep, index, _frac(point)):
                return -order
        return 0

    def poles(self):
        return tuple(
            (r, i, p) for r, i, p, order in self.declarations if order > 0
        )


# ---------------------------------------------------------------------------
# normalized coefficient ring


def _atom_key(atom):
    return tuple(str(part) for part in atom)


class SymCoeff:
    """A product: rational scalar times atoms raised to integer powers."""

    __slots__ = ("scalar", "powers")

    def __init__(self, scalar, powers):
        if scalar == 0:
            raise StructureError("zero coefficient in a leading term")
        self.scalar = _frac(scalar)
        self.powers = tuple(sorted(powers.items(), key=lambda kv: _atom_key(kv[0])))

    @staticmethod
    def of(scalar=1, powers=None):
        merged = {}
        scalar = _frac(scalar)
        for atom, exp in (powers or {}).items():
            if exp == 0:
                continue
            if atom[0] == "cyclo" and atom[1] < 0:
                # 1 - q^y = -q^y (1 - q^-y) for y > 0; keep cyclo arguments positive
                y = -atom[1]
                scalar *= (-1) ** exp
                merged[("qpow", y)] = merged.get(("qpow", y), 0) + exp
                merged[("cyclo", y)] = merged.get(("cyclo", y), 0) + exp
            else:
                merged[atom] = merged.get(atom, 0) + exp
        merged = {a: e for a, e in merged.items() if e != 0}
        return SymCoeff(scalar, merged)

    @staticmethod
    def one():
        return SymCoeff.of(1)

    def _as_dict(self):
        return dict(self.powers)

    def __mul__(self, other):
        powers = self._as_dict()
        for atom, exp in other.powers:
            powers[atom] = powers.get(atom, 0) + exp
        return SymCoeff.of(self.scalar * other.scalar, powers)

    def inverse(self):
        return SymCoeff.of(1 / self.scalar, {a: -e for a, e in self.powers})

    def __pow__(self, n):
        if n == 0:
            return SymCoeff.one()
        base = self if n > 0 else self.inverse()
        out = SymCoeff.one()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SymCoeff)
            and self.scalar == other.scalar
            and self.powers == other.powers
        )

    def __hash__(self):
        return hash((self.scalar, self.powers))

    def is_rational(self):
        return not self.powers

    def abs_normalized(self):
        """Modulus: drop unimodular units and identify conjugate gamma values."""
        powers = {}
        for atom, exp in self.powers:
            if atom[0] == "unit":
                continue
            if atom[0] == "gamma":
                atom = ("gamma", atom[1], atom[2], False, atom[4], atom[5])
            powers[atom] = powers.get(atom, 0) + exp
        return SymCoeff.of(abs(self.scalar), powers)

    def atoms(self):
        return tuple(atom for atom, _ in self.powers)

    def render(self):
        if not self.powers:
            return str(self.scalar)
        parts = []
        if self.scalar != 1:
            parts.append(str(self.scalar))
        for atom, exp in self.powers:
            s = atom_str(atom)
            parts.append(s if exp == 1 else f"{s}^{exp}")
        return " * ".join(parts)

    def __repr__(self):
        return f"SymCoeff({self.render()})"


def atom_str(atom):
    kind = atom[0]
    if kind == "logq":
        return "log q"
    if kind == "2pi":
        return "2 pi"
    if kind == "qpow":
        return f"q^{atom[1]}"
    if kind == "cyclo":
        return f"(1 - q^-{atom[1]})"
    if kind == "cyclou":
        return f"(1 - {atom[1]} q^-{atom[2]})"
    if kind == "unit":
        return str(atom[1])
    if kind == "param":
        return str(atom[1])
    if kind == "gamma":
        _, rep, index, conj, point, order = atom
        psi = "psibar" if conj else "psi"
        body = f"gamma({point}, {rep}, r_{index}, {psi})"
        if order == 0:
            return body
        if order == -1:
            return f"Res[x={point}] gamma(x, {rep}, r_{index}, {psi})"
        return f"lead[x={point}, ord={order}] gamma(x, {rep}, r_{index}, {psi})"
    if kind == "degquot":
        return "deg(pi)/deg(sigma)"
    if kind == "gmfactor":
        return "gamma(G/M)"
    if kind == "resmu":
        return f"Res[s={atom[1]}] mu"
    if kind == "adquot":
        return "|gamma(0, pi, Ad, psi)| / |gamma(0, sigma, Ad, psi)|"
    raise InputError(f"unknown atom {atom!r}")


LOGQ = ("logq",)
TWO_PI = ("2pi",)


def _cyclo_atom(x):
    return ("cyclo", _frac(x))


# ---------------------------------------------------------------------------
# leading Laurent terms


@dataclass(frozen=True)
class LaurentLeading:
    """Leading term at a point: vanishing order and its exact coefficient."""

    order: int
    coeff: SymCoeff


def laurent_leading(expr, s0, axioms=None):
    """Order and leading coefficient of a factor product at s = s0.

    Cyclotomic factors contribute a first-order zero with coefficient
    a log q when they vanish, and their value as an atom otherwise; gamma
    factors contribute their declared order, scaled by a^order because of
    the substitution s -> a s + b.
    """
    s0 = _frac(s0)
    order = 0
    coeff = SymCoeff.one()
    for f in expr:
        if isinstance(f, Cyclotomic):
            x = f.a * s0 + f.b
            if f.c == 1 and x == 0:
                # simple zero: derivative is a log q there
                order += f.exponent
                coeff = coeff * SymCoeff.of(f.a ** f.exponent, {LOGQ: f.exponent})
            elif f.c == 1:
                coeff = coeff * SymCoeff.of(1, {_cyclo_atom(x): f.exponent})
            else:
                coeff = coeff * SymCoeff.of(1, {("cyclou", str(f.c), x): f.exponent})
        elif isinstance(f, GammaSym):
            if axioms is None:
                raise InputError("missing analytic declaration for gamma factors")
            x = f.a * s0 + f.b
            n = axioms.order_at(f.rep, f.index, x)
            if f.a == 0:
                if n != 0:
                    raise StructureError("constant gamma factor pinned at a singular point")
                atom = ("gamma", f.rep, f.index, f.conj, x, 0)
                coeff = coeff * SymCoeff.of(1, {atom: f.exponent})
                continue
            order += n * f.exponent
            atom = ("gamma", f.rep, f.index, f.conj, x, n)
            coeff = coeff * SymCoeff.of(f.a ** (n * f.exponent), {atom: f.exponent})
        elif isinstance(f, ConstSym):
            if f.name == "logq":
                coeff = coeff * SymCoeff.of(1, {LOGQ: f.exponent})
            elif f.name == "2pi":
                coeff = coeff * SymCoeff.of(1, {TWO_PI: f.exponent})
            elif f.name == "j":
                coeff = coeff * SymCoeff.of(1, {("param", "j"): f.exponent})
            else:
                try:
                    val = Fraction(f.name)
                except ValueError as exc:
                    raise InputError(f"unknown constant symbol {f.name!r}") from exc
                coeff = coeff * SymCoeff.of(val ** f.exponent)
        else:
            raise InputError(f"unknown factor {f!r}")
    return LaurentLeading(order=order, coeff=coeff)


# ---------------------------------------------------------------------------
# the two structured products


def mu_expression(m_ls, axioms=None):
    """The density as a 2 m_ls factor product, scales +i and -i per level."""
    if m_ls < 1:
        raise InputError("m_ls must be at least 1")
    factors = []
    for i in range(1, m_ls + 1):
        factors.append(GammaSym(rep="sigma", index=i, conj=True, a=i, b=0))
        factors.append(GammaSym(rep="sigma~", index=i, conj=False, a=-i, b=0))
    return tuple(factors)


def adjoint_quotient_expression(m_ls, s0, axioms=None):
    """The adjoint gamma quotient with the Levi adjoint factor cancelled."""
    s0 = _frac(s0)
    if s0 not in (Fraction(1), Fraction(1, 2)):
        raise InputError("s0 must be 1 or 1/2")
    factors = [
        Cyclotomic(a=1, b=0),
        Cyclotomic(a=-1, b=1, exponent=-1),
    ]
    for i in range(1, m_ls + 1):
        factors.append(GammaSym(rep="sigma", index=i, conj=False, a=1, b=i * s0))
        factors.append(GammaSym(rep="sigma~", index=i, conj=False, a=1, b=-i * s0))
    return tuple(factors)


# ---------------------------------------------------------------------------
# the end-to-end derivation


@dataclass(frozen=True)
class DerivationStep:
    rule: str
    paper_ref: str
    before: str
    after: str


@dataclass(frozen=True)
class DerivationReport:
    """Outcome of the symbolic composition, with a full step trace.

    ``ok`` demands three things at once: the density residue had a simple
    pole, every symbol cancelled, and the surviving rational constant equals
    m_idx / (j <chi, alpha^vee>).
    """

    m_ls: int
    j: int
    chi_pairing: int
    m_idx: int
    ok: bool
    constant: Fraction | None
    surviving: tuple
    steps: tuple

    def expected_constant(self):
        return Fraction(self.m_idx, self.j * self.chi_pairing)


def derive_main_theorem(m_ls, j, sc, axioms=None):
    """Compose the measure, density, residue and adjoint-quotient identities.

    Returns a report whose steps show each substitution; on an axiom
    mismatch (for example a pole index that no level carries) the report
    comes back with ``ok`` false and the unresolved symbols listed instead
    of raising.
    """
    if j not in (1, 2):
        raise InputError("j must be 1 or 2")
    if m_ls < 1:
        raise InputError("m_ls must be at least 1")
    if axioms is None:
        axioms = GammaAxioms.pole_on(j)
    if len(axioms.poles()) != 1:
        raise InputError("exactly one gamma label must carry the simple pole")

    s0 = Fraction(1, j)
    con = Fraction(sc.m_idx, sc.chi_pairing)
    exponent = sc.dim_a_m - sc.dim_a_g
    steps = []

    state = SymCoeff.of(
        1, {("degquot",): 1, ("gmfactor",): -1, _cyclo_atom(1): -exponent}
    )
    steps.append(
        DerivationStep(
            rule="measure-normalization",
            paper_ref="Prop 3.1",
            before="d(pi)/d(sigma)",
            after=state.render(),
        )
    )

    mu = mu_expression(m_ls, axioms)
    steps.append(
        DerivationStep(
            rule="density-product",
            paper_ref="Thm 4.2",
            before="mu(sigma (x) chi_{s alpha~})",
            after=expr_str(mu),
        )
    )

    before = state.render()
    state = state * SymCoeff.of(
        con, {("degquot",): -1, ("gmfactor",): 1, LOGQ: 1, ("resmu", s0): 1}
    )
    steps.append(
        DerivationStep(
            rule="degree-quotient-residue",
            paper_ref="Thm 4.8",
            before=before,
            after=state.render(),
        )
    )

    mu_lead = laurent_leading(mu, s0, axioms)
    if mu_lead.order != -1:
        steps.append(
            DerivationStep(
                rule="residue-extraction",
                paper_ref="Thm 6.1 proof",
                before=state.render(),
                after=f"failure: density has order {mu_lead.order} at s = {s0}, not a simple pole",
            )
        )
        return DerivationReport(
            m_ls=m_ls,
            j=j,
            chi_pairing=sc.chi_pairing,
            m_idx=sc.m_idx,
            ok=False,
            constant=None,
            surviving=tuple(atom_str(a) for a in state.atoms()),
            steps=tuple(steps),
        )
    before = state.render()
    state = state * mu_lead.coeff * SymCoeff.of(1, {("resmu", s0): -1})
    steps.append(
        DerivationStep(
            rule="residue-rescale",
            paper_ref="Thm 6.1 proof",
            before=before,
            after=state.render(),
        )
    )

    ad = adjoint_quotient_expression(m_ls, s0, axioms)
    ad_lead = laurent_leading(ad, 0, axioms)
    if ad_lead.order != 0:
        steps.append(
            DerivationStep(
                rule="adjoint-quotient",
                paper_ref="Cor 5.6",
                before=state.render(),
                after=f"failure: adjoint quotient has order {ad_lead.order} at s = 0",
            )
        )
        return DerivationReport(
            m_ls=m_ls,
            j=j,
            chi_pairing=sc.chi_pairing,
            m_idx=sc.m_idx,
            ok=False,
            constant=None,
            surviving=tuple(atom_str(a) for a in state.atoms()),
            steps=tuple(steps),
        )
    before = state.render()
    state = state * ad_lead.coeff.inverse() * SymCoeff.of(1, {("adquot",): 1})
    steps.append(
        DerivationStep(
            rule="adjoint-quotient",
            paper_ref="Cor 5.6",
            before=before,
            after=state.render(),
        )
    )

    before = state.render()
    state = state.abs_normalized()
    steps.append(
        DerivationStep(
            rule="conjugate-modulus",
            paper_ref="Thm 6.1 proof",
            before=before,
            after=state.render(),
        )
    )

    surviving = tuple(
        atom_str(atom) for atom in state.atoms() if atom != ("adquot",)
    )
    constant = state.scalar
    ok = not surviving and constant == Fraction(sc.m_idx, j * sc.chi_pairing)
    return DerivationReport(
        m_ls=m_ls,
        j=j,
        chi_pairing=sc.chi_pairing,
        m_idx=sc.m_idx,
        ok=ok,
        constant=constant,
        surviving=surviving,
        steps=tuple(steps),
    )


@dataclass(frozen=True)
class QPower:
    """An exact monomial q^r with rational exponent."""

    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", _frac(self.exponent))

    def __str__(self):
        if self.exponent == 0:
            return "1"
        if self.exponent == 1:
            return "q"
        if self.exponent.denominator == 1:
            return f"q^{self.exponent}"
        return f"q^({self.exponent})"
