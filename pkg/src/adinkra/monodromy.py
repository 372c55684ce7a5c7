"""Signed monodromy of an Adinkra.

Each colour i gives a signed bijection from fermions to bosons (sign -1 on
dashed edges) with inverse going the other way.  Following a colour-(j+1)
edge and then a colour-1 edge yields the signed generator zeta_j on the
fermions; the group they generate is the signed monodromy group H.  Dropping
signs gives the ordinary monodromy group M, and the kernel of that
projection is Sigma.  The analysis report ties these to the code: whether
the all-ones word lies in it decides |H|, |Sigma|, the kernel invariant K
and its sign chi0, and whether the colour maps satisfy a nontrivial
relation.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import reduce

from .codes import BinaryWord, LinearCode, contains
from .graph import (
    Adinkra,
    apply_dashing,
    connected_components,
    dashing_bits,
    permute_colors,
    quotient_chromotopology,
    validate,
)
from .signed import DEFAULT_ORDER_BOUND, SignedGroup, SignedPermutation, closure

K_TRIVIAL = "trivial"
K_OMEGA = "omega"
K_MINUS_OMEGA = "minus-omega"


class TheoremViolation(Exception):
    """A structure theorem failed on a concrete instance (a bug, never data)."""


@dataclass(frozen=True)
class GarMatrices:
    """Signed colour maps of an Adinkra: L[i] sends fermions to bosons along
    colour i+1, R[i] is its inverse."""

    L: tuple[SignedPermutation, ...]
    R: tuple[SignedPermutation, ...]

    @property
    def colors(self) -> int:
        return len(self.L)

    @property
    def degree(self) -> int:
        return self.L[0].degree


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analysis computes for one Adinkra."""

    N: int
    k: int
    d: int
    h1_in_code: bool
    genus: int
    K_tag: str
    chi0: int
    H_order: int
    H_structure: str
    Sigma_order: int
    Sigma_elementary_abelian: bool
    M_order: int
    relation_witness: str | None


def gar_matrices(a: Adinkra) -> GarMatrices:
    report = validate(a)
    if not report.ok:
        raise ValueError(f"invalid adinkra: {report.failure} ({report.witness})")
    L = tuple(
        SignedPermutation(
            tuple(b for b, _ in a.edges[c]), tuple(s for _, s in a.edges[c])
        )
        for c in range(a.colors)
    )
    return GarMatrices(L, tuple(m.inverse() for m in L))


def zeta_generators(gm: GarMatrices) -> list[SignedPermutation]:
    """The signed monodromy generators: colour j+1 out, colour 1 back."""
    if gm.colors < 2:
        raise ValueError("need at least two colours")
    return [gm.R[0] * gm.L[j] for j in range(1, gm.colors)]


def signed_monodromy_group(
    zetas, order_bound: int = DEFAULT_ORDER_BOUND
) -> SignedGroup:
    return closure(zetas, order_bound)


def _omega_image(zetas) -> SignedPermutation:
    return reduce(SignedPermutation.compose, zetas)


def compute_K(zetas) -> str:
    """Which kernel the generator map hits: the product of all zetas is the
    image of the central product of generators; it is the identity, minus
    the identity, or neither."""
    w = _omega_image(zetas)
    if w.is_identity:
        return K_OMEGA
    if w.is_minus_identity:
        return K_MINUS_OMEGA
    return K_TRIVIAL


def chi0(a: Adinkra) -> int:
    """+1, -1, or 0 according to the kernel tag."""
    tag = compute_K(zeta_generators(gar_matrices(a)))
    return {K_OMEGA: 1, K_MINUS_OMEGA: -1, K_TRIVIAL: 0}[tag]


def sigma_kernel(H: SignedGroup) -> SignedGroup:
    """Subgroup of H acting trivially on unsigned fermions."""
    return H.abs_kernel()


def unsigned_monodromy(H: SignedGroup) -> frozenset[tuple[int, ...]]:
    """Image of H under dropping signs, as a set of permutations."""
    return H.abs_image()


def is_elementary_abelian(group: SignedGroup) -> bool:
    elements = list(group.elements)
    return all((g * g).is_identity for g in elements) and all(
        g * h == h * g for g in elements for h in elements
    )


def genus_and_d(colors: int, dimension: int) -> tuple[int, int]:
    """Boson count d = 2^(N-k-1) and genus 1 + (N-4)d/4 of the surface the
    connected graph embeds in.  A non-integer genus is an error, never
    rounded."""
    if colors < 2:
        raise ValueError("need at least two colours")
    if not 0 <= dimension <= colors - 1:
        raise ValueError(f"code dimension {dimension} outside 0..{colors - 1}")
    d = 2 ** (colors - dimension - 1)
    numerator = (colors - 4) * d
    if numerator % 4:
        raise ValueError(
            f"genus 1 + ({colors}-4)*{d}/4 is not an integer for N={colors}, k={dimension}"
        )
    return d, 1 + numerator // 4


def find_relation(gm: GarMatrices) -> str | None:
    """The alternating product R1 L2 R3 L4 ... R(N-1) LN, reported with its
    sign when it is plus or minus the identity; None otherwise, and None for
    odd N where the product does not close up."""
    n = gm.colors
    if n % 2:
        return None
    factors = []
    tokens = []
    for i in range(1, n + 1):
        if i % 2:
            factors.append(gm.R[i - 1])
            tokens.append(f"R{i}")
        else:
            factors.append(gm.L[i - 1])
            tokens.append(f"L{i}")
    product = reduce(SignedPermutation.compose, factors)
    word = " ".join(tokens)
    if product.is_identity:
        return f"{word} = +1"
    if product.is_minus_identity:
        return f"{word} = -1"
    return None


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise TheoremViolation(message)


def _component_signs(a: Adinkra, omega_image: SignedPermutation) -> list[int]:
    """Sign of the omega image on each component; requires its unsigned part
    to fix every fermion and the sign to be constant per component."""
    signs = []
    for component in connected_components(a):
        component_signs = {
            omega_image.signs[f]
            for f in range(a.d)
            if a.fermions[f] in component
        }
        _check(
            len(component_signs) == 1,
            "omega image has inconsistent signs inside one component",
        )
        signs.append(component_signs.pop())
    return signs


def analyze(a: Adinkra) -> AnalysisReport:
    """Full analysis of one Adinkra, with every structural theorem asserted
    along the way; a TheoremViolation means the toolkit is broken."""
    report = validate(a)
    if not report.ok:
        raise ValueError(f"invalid adinkra: {report.failure} ({report.witness})")
    if a.code is None:
        raise ValueError("analysis needs the underlying code (mixed union?)")
    n = a.colors
    k = a.code.dimension
    h1 = contains(a.code, BinaryWord.ones(n))
    d_formula, genus = genus_and_d(n, k)
    connected = len(connected_components(a)) == 1
    if connected:
        _check(a.d == d_formula, f"boson count {a.d} is not 2^({n}-{k}-1)")

    gm = gar_matrices(a)
    zetas = zeta_generators(gm)
    for i, z in enumerate(zetas):
        _check((z * z).is_minus_identity, f"zeta_{i + 1} squared is not -1")
        for j in range(i + 1, len(zetas)):
            _check(
                zetas[j] * z == (z * zetas[j]).negate(),
                f"zeta_{i + 1} and zeta_{j + 1} do not anticommute",
            )

    H = signed_monodromy_group(zetas)
    sigma = sigma_kernel(H)
    m_perms = unsigned_monodromy(H)
    sigma_ea = is_elementary_abelian(sigma)
    _check(sigma_ea, "Sigma is not elementary abelian")
    _check(
        H.order == len(m_perms) * sigma.order,
        "H order does not factor through Sigma and M",
    )
    _check(len(m_perms) == 2 ** (n - k - 1), f"|M| != 2^({n}-{k}-1)")
    # a closed set of involutions is automatically abelian: (pq)^2 = id
    # forces pq = (pq)^-1 = q^-1 p^-1 = qp
    _check(
        all(_perm_is_involution(p) for p in m_perms),
        "M contains a non-involution",
    )
    _check(
        all(all(p[f] != f for f in range(a.d)) for p in m_perms if not _perm_is_id(p)),
        "M does not act freely",
    )
    if connected:
        _check(_perms_transitive(m_perms, a.d), "M is not transitive on fermions")

    tag = compute_K(zetas)
    chi = {K_OMEGA: 1, K_MINUS_OMEGA: -1, K_TRIVIAL: 0}[tag]
    _check((tag == K_TRIVIAL) == (chi == 0), "chi0 and K disagree")

    omega_image = _omega_image(zetas)
    if _perm_is_id(omega_image.image):
        signs = _component_signs(a, omega_image)
        if all(s == 1 for s in signs):
            _check(tag == K_OMEGA, "component signs say omega but K disagrees")
        elif all(s == -1 for s in signs):
            _check(tag == K_MINUS_OMEGA, "component signs say -omega but K disagrees")
        else:
            _check(tag == K_TRIVIAL, "mixed component signs must kill K")

    k_order = 1 if tag == K_TRIVIAL else 2
    _check(H.order == 2**n // k_order, "|H| != |G_(N-1)| / |K|")
    _check(sigma.order == 2 * 2**k // k_order, "|Sigma| != 2 |C| / |K|")
    if connected:
        if h1:
            _check(tag != K_TRIVIAL, "h1 in the code but K is trivial")
            _check(H.order == 2 ** (n - 1), "h1 in code: |H| != 2^(N-1)")
            _check(sigma.order == 2**k, "h1 in code: |Sigma| != 2^k")
        else:
            _check(tag == K_TRIVIAL, "h1 outside the code but K is not trivial")
            _check(H.order == 2**n, "h1 outside code: |H| != 2^N")
            _check(sigma.order == 2 ** (k + 1), "h1 outside code: |Sigma| != 2^(k+1)")

    relation = find_relation(gm)
    if n % 2 == 0:
        _check(
            (relation is not None) == (tag != K_TRIVIAL),
            "relation witness disagrees with K",
        )

    structure_rank = n - 1 if tag == K_TRIVIAL else n - 2
    _check(H.order == 2 ** (structure_rank + 1), "H order does not match its Vee rank")

    return AnalysisReport(
        N=n,
        k=k,
        d=a.d,
        h1_in_code=h1,
        genus=genus,
        K_tag=tag,
        chi0=chi,
        H_order=H.order,
        H_structure=f"G_{structure_rank}",
        Sigma_order=sigma.order,
        Sigma_elementary_abelian=sigma_ea,
        M_order=len(m_perms),
        relation_witness=relation,
    )


def _perm_is_id(p: tuple[int, ...]) -> bool:
    return all(p[i] == i for i in range(len(p)))


def _perm_is_involution(p: tuple[int, ...]) -> bool:
    return all(p[p[i]] == i for i in range(len(p)))


def _perms_transitive(perms, degree: int) -> bool:
    return {p[0] for p in perms} == set(range(degree))


def report_to_dict(
    report: AnalysisReport, a: Adinkra, rainbow: tuple[int, ...] | None = None
) -> dict:
    """JSON-ready snapshot: the report fields plus everything needed to
    rebuild the exact graph (code generators, dashing, colour order)."""
    doc: dict = {"schema": 1}
    doc.update(asdict(report))
    doc["code_generators"] = [str(w) for w in a.code.generators] if a.code else []
    doc["dashing"] = dashing_bits(a)
    doc["rainbow"] = {
        "original": list(range(1, report.N + 1)),
        "applied": list(rainbow) if rainbow else list(range(1, report.N + 1)),
    }
    return doc


def adinkra_from_dict(doc: dict) -> Adinkra:
    """Rebuild the exact Adinkra a report was produced from."""
    if doc.get("schema") != 1:
        raise ValueError(f"unsupported schema: {doc.get('schema')!r}")
    n = doc["N"]
    gens = tuple(BinaryWord.from_text(t) for t in doc["code_generators"])
    bare = quotient_chromotopology(LinearCode(n, gens))
    applied = tuple(doc["rainbow"]["applied"])
    if applied != tuple(range(1, n + 1)):
        bare = permute_colors(bare, applied)
    return apply_dashing(bare, list(doc["dashing"]))
