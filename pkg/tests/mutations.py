"""Mutation generators for certificates.

Every mutation returned here is guaranteed to break at least one of the
invariants listed on its certificate type, so verifiers must reject all of
them.  Mutations that need a structural opportunity (e.g. an outside vertex
with a stray neighbor) are skipped when the opportunity is absent.
"""

from __future__ import annotations

from dataclasses import replace

from crownkit.crown import CrownDecomposition
from crownkit.expansion import (
    AdditiveExpansionCertificate,
    BalancedExpansionResult,
    ExpansionCertificate,
    StrongerExpansionCertificate,
    WeightedExpansionCertificate,
    effective_w_b_max,
)
from crownkit.graphs import BipartiteGraph, Graph, WeightedBipartiteGraph


def mutate_crown(cd: CrownDecomposition) -> list[CrownDecomposition]:
    muts = []
    if cd.witness:
        # uncovered head vertex
        muts.append(replace(cd, witness=cd.witness - {min(cd.witness)}))
        u, v = min(cd.witness)
        h, c = (u, v) if u in cd.head else (v, u)
        # head vertex moved into the crown: its witness edge now sits inside
        muts.append(CrownDecomposition(cd.crown | {h}, cd.head - {h},
                                       cd.rest, cd.witness))
        # matched crown vertex exiled to the rest: witness edge leaves H x C
        muts.append(CrownDecomposition(cd.crown - {c}, cd.head,
                                       cd.rest | {c}, cd.witness))
    return muts


def mutate_expansion(g: BipartiteGraph, cert: ExpansionCertificate) -> list[ExpansionCertificate]:
    muts = [replace(cert, m=cert.m - {min(cert.m)}),
            replace(cert, x=cert.x - {min(cert.x)})]
    for b in sorted(g.side_b - cert.y):
        if set(g.adj_b[b]) - cert.x:
            muts.append(replace(cert, y=cert.y | {b}))
            break
    return muts


def mutate_weighted(g: WeightedBipartiteGraph,
                    cert: WeightedExpansionCertificate) -> list[WeightedExpansionCertificate]:
    base = g.base
    muts = [replace(cert, y=cert.y - {min(cert.y)})]  # f no longer total on y
    for b in sorted(cert.y):
        strangers = sorted(cert.x - set(base.adj_b[b]))
        if strangers:
            f = dict(cert.f)
            f[b] = strangers[0]
            muts.append(replace(cert, f=f))
            break
    if cert.q - cert.w_cap + 1 > 0:
        # starve one head below its load bound
        a = min(cert.x)
        starved = frozenset(b for b in cert.y if cert.f[b] != a)
        f = {b: cert.f[b] for b in starved}
        if starved:
            muts.append(replace(cert, y=starved, f=f))
    for b in sorted(base.side_b - cert.y):
        if set(base.adj_b[b]) - cert.x:
            f = dict(cert.f)
            f[b] = base.adj_b[b][0]
            muts.append(replace(cert, y=cert.y | {b}, f=f))
            break
    return muts


def mutate_stronger(g: BipartiteGraph,
                    cert: StrongerExpansionCertificate) -> list[StrongerExpansionCertificate]:
    muts = []
    if cert.a_hat:
        # every a_hat vertex has q >= 1 neighbors in b_hat, so dropping one
        # leaves b_hat looking outside a_hat
        muts.append(replace(cert, a_hat=cert.a_hat - {min(cert.a_hat)}))
        # cut b_hat below the q|a_hat| demand
        keep = sorted(cert.b_hat)[: cert.q * len(cert.a_hat) - 1]
        muts.append(replace(cert, b_hat=frozenset(keep)))
    for b in sorted(g.side_b - cert.b_hat):
        if set(g.adj_b[b]) - cert.a_hat:
            muts.append(replace(cert, b_hat=cert.b_hat | {b}))
            break
    return muts


def mutate_additive(g: BipartiteGraph,
                    cert: AdditiveExpansionCertificate) -> list[AdditiveExpansionCertificate]:
    muts = []
    shrink_to = len(cert.a_hat) + cert.q - 1
    muts.append(replace(cert, b_hat=frozenset(sorted(cert.b_hat)[:shrink_to])))
    muts.append(replace(cert, a_hat=cert.a_hat - {min(cert.a_hat)}))
    for b in sorted(g.side_b - cert.b_hat):
        if set(g.adj_b[b]) - cert.a_hat:
            muts.append(replace(cert, b_hat=cert.b_hat | {b}))
            break
    return muts


def mutate_balanced(g: WeightedBipartiteGraph,
                    res: BalancedExpansionResult) -> list[BalancedExpansionResult]:
    base = g.base
    muts = []
    if base.side_b:
        f = dict(res.f)
        del f[min(f)]
        muts.append(replace(res, f=f))  # f no longer total
    all_a = base.side_a
    if all_a:
        gone = min(all_a)
        muts.append(replace(res, a1=res.a1 - {gone}, a2=res.a2 - {gone}))
    w_max = effective_w_b_max(g)
    loads = {a: g.weight(a) for a in all_a}
    for b, a in res.f.items():
        loads[a] += g.weight(b)
    for a in sorted(res.a1):
        if loads[a] > res.q + w_max - 1:
            muts.append(replace(res, a1=res.a1 - {a}, a2=res.a2 | {a}))
            break
    for a in sorted(res.a2):
        if loads[a] < res.q - w_max + 1:
            muts.append(replace(res, a1=res.a1 | {a}, a2=res.a2 - {a}))
            break
    for b in sorted(base.side_b):
        strangers = sorted(all_a - set(base.adj_b[b]))
        if strangers:
            f = dict(res.f)
            f[b] = strangers[0]
            muts.append(replace(res, f=f))
            break
    return muts
