"""The top-level embeddability decision.

A complex embeds in the 3-sphere iff all complexes attached at a cut
vertex do, so the verdict splits at cut vertices (and at connected
components) and combines leaf-block verdicts.  Per block: no planar
rotation system denies even an orientable 3-manifold; one found plus a
certified trivial fundamental group gives the 3-sphere; trivial F_p
homology at some requested prime combined with nontrivial integral
homology denies the 3-sphere; otherwise the block stays undecided.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import PreComplex, VertexId
from .errors import NotPrimeError
from .homology import h1_integral, is_p_nullhomologous, is_prime
from .links import attached_complexes, cut_vertices
from .presentation import Pi1Verdict, pi1_trivial_heuristic
from .rotation import RotationSystem
from .search import PrsSearchResult, search_planar_rotation_system
from .tracing import is_planar_rotation_system

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class BlockVerdict:
    path: str
    orientable_3manifold: str
    sphere3: str
    reasons: tuple[str, ...]
    sigma_doc: dict | None
    homology_doc: dict | None
    pi1_doc: dict | None

    def to_doc(self) -> dict:
        doc = {
            "path": self.path,
            "orientable_3manifold": self.orientable_3manifold,
            "sphere3": self.sphere3,
            "reasons": list(self.reasons),
        }
        if self.sigma_doc is not None:
            doc["sigma"] = self.sigma_doc["sigma"]
        if self.homology_doc is not None:
            doc["homology"] = self.homology_doc
        if self.pi1_doc is not None:
            doc["pi1"] = self.pi1_doc
        return doc


@dataclass(frozen=True)
class EmbedVerdict:
    orientable_3manifold: str
    sphere3: str
    reasons: tuple[str, ...]
    blocks: tuple[BlockVerdict, ...]

    def to_doc(self) -> dict:
        return {
            "orientable_3manifold": self.orientable_3manifold,
            "sphere3": self.sphere3,
            "reasons": list(self.reasons),
            "blocks": [b.to_doc() for b in self.blocks],
        }


def _restrict(c: PreComplex, keep: set[VertexId]) -> PreComplex:
    edges = {
        e: ends
        for e, ends in c.edges.items()
        if ends[0] in keep and ends[1] in keep
    }
    faces = {
        f: b for f, b in c.faces.items() if c.face_vertices(f) <= keep
    }
    return PreComplex(c.kind, tuple(v for v in c.vertices if v in keep), edges, faces)


def _leaf_blocks(c: PreComplex) -> list[tuple[str, PreComplex]]:
    """Split into connected components, then recursively at the least
    cut vertex of each piece, keeping a human-readable path label."""
    out: list[tuple[str, PreComplex]] = []
    components = c.components()
    for comp in components:
        piece = _restrict(c, comp) if len(components) > 1 else c
        label = min(comp)
        _split(piece, label if len(components) > 1 else "", out)
    return out


def _split(c: PreComplex, path: str, out: list[tuple[str, PreComplex]]) -> None:
    cuts = cut_vertices(c)
    if not cuts:
        out.append((path or "whole", c))
        return
    v = min(cuts)
    for k, attached in enumerate(attached_complexes(c, v)):
        _split(attached, f"{path}@{v}.{k}" if path else f"@{v}.{k}", out)


def _mixed_prime_reason(
    primes: list[int], null_prime: int, betti1: int, torsion: list[int]
) -> str:
    witness = None
    for t in sorted(torsion):
        d = 2
        while d * d <= t:
            if t % d == 0:
                witness = d if witness is None else min(witness, d)
                break
            d += 1
        else:
            witness = t if witness is None else min(witness, t)
        if witness == 2:
            break
    if witness is None:
        witness = "betti"
    return f"MixedPrimeHomology({null_prime},{witness})"


def _block_verdict(
    path: str,
    block: PreComplex,
    primes: list[int],
    tietze_budget: int,
    cap: int | None,
) -> BlockVerdict:
    from .documents import sigma_to_doc  # local to avoid import cycle

    prs: PrsSearchResult = search_planar_rotation_system(block, "first", cap)
    if prs.status == "exhausted":
        return BlockVerdict(
            path,
            NO,
            NO,
            ("NoPlanarRotationSystem",),
            None,
            None,
            None,
        )
    sigma: RotationSystem = prs.sigma
    planar, witness = is_planar_rotation_system(block, sigma)
    if not planar:
        raise AssertionError(f"search returned a non-planar system (at {witness!r})")
    reasons = ["PlanarRotationSystemFound"]
    sigma_doc = sigma_to_doc(sigma)

    pi1: Pi1Verdict = pi1_trivial_heuristic(block, tietze_budget)
    if pi1.status == "trivial":
        reasons.append("PlanarPlusSimplyConnected")
        return BlockVerdict(
            path, YES, YES, tuple(reasons), sigma_doc, None, pi1.to_doc()
        )

    betti1, torsion = h1_integral(block)
    homology_doc = {"betti1": betti1, "torsion": list(torsion)}
    if betti1 > 0 or torsion:
        null_prime = None
        for p in primes:
            if is_p_nullhomologous(block, p):
                null_prime = p
                break
        if null_prime is not None:
            reasons.append(
                _mixed_prime_reason(primes, null_prime, betti1, torsion)
            )
            return BlockVerdict(
                path, YES, NO, tuple(reasons), sigma_doc, homology_doc, pi1.to_doc()
            )
    reasons.append("Undecided")
    return BlockVerdict(
        path, YES, UNKNOWN, tuple(reasons), sigma_doc, homology_doc, pi1.to_doc()
    )


def verdict(
    c: PreComplex,
    primes: list[int],
    tietze_budget: int = 100_000,
    cap: int | None = None,
) -> EmbedVerdict:
    """Decide embeddability of ``c`` in an orientable 3-manifold and,
    where the theory allows, in the 3-sphere."""
    if not primes:
        raise NotPrimeError("at least one prime is required")
    for p in primes:
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")

    blocks = [
        _block_verdict(path, block, primes, tietze_budget, cap)
        for path, block in _leaf_blocks(c)
    ]
    orientable = YES if all(b.orientable_3manifold == YES for b in blocks) else NO
    if any(b.sphere3 == NO for b in blocks):
        sphere3 = NO
    elif any(b.sphere3 == UNKNOWN for b in blocks):
        sphere3 = UNKNOWN
    else:
        sphere3 = YES
    reasons: list[str] = []
    for b in blocks:
        for r in b.reasons:
            if r not in reasons:
                reasons.append(r)
    return EmbedVerdict(orientable, sphere3, tuple(reasons), tuple(blocks))
