"""Theorem-verification suites over the group catalog.

Each suite instantiates one verified statement on every applicable catalog
group and reports a deterministic case list: pass/fail/skipped plus witness
data sufficient to re-check a failure by hand. Skips always carry a
machine-readable reason ("order-bound", "aut-cap", ...). Case order is
fixed by catalog order, so report JSON is stable across runs (wall time
lives only in the summary).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from .actions import (
    StabilizerContainment,
    WholeGroup,
    coset_action,
    essential_from_action,
    essential_from_malnormal,
    essential_from_self_normalizing,
    is_malnormal,
    is_self_normalizing,
    natural_action,
    trivial_action,
)
from .autgrp import automorphism_group, cyclic_power_semidirect, holomorph, is_complete
from .catalog import catalog
from .errors import UnknownSuite
from .essential import (
    abelian_essential_extension,
    abelian_primary_decomposition,
    essential_core,
    essential_subgroups,
    essentialize,
    has_proper_essential,
    is_essential,
    is_essential_definitional,
    socle,
    split_conditions,
)
from .group import (
    FiniteGroup,
    SubgroupHandle,
    center,
    direct_product,
    normal_closure,
    subgroup_generated,
)
from .iso import is_isomorphic
from .lattice import all_subgroups, normal_complement, normal_subgroups
from .named import alternating, cyclic, dihedral, symmetric
from .perm import Perm


@dataclass
class SuiteCase:
    case_id: str
    groups: tuple[str, ...]
    claim: str
    status: str  # "pass" | "fail" | "skipped"
    reason: str | None = None
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "groups": list(self.groups),
            "claim": self.claim,
            "status": self.status,
            "reason": self.reason,
            "witness": self.witness,
        }


@dataclass
class VerificationReport:
    suite: str
    cases: list[SuiteCase]
    wall_time: float

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if c.status == "fail")

    @property
    def skipped(self) -> int:
        return sum(1 for c in self.cases if c.status == "skipped")

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": [c.to_dict() for c in self.cases],
            "summary": {
                "pass": self.passed,
                "fail": self.failed,
                "skipped": self.skipped,
                "wall_time": round(self.wall_time, 3),
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def text_table(self) -> str:
        id_w = max([len("case")] + [len(c.case_id) for c in self.cases])
        st_w = len("skipped")
        lines = [
            f"{'case':<{id_w}}  {'status':<{st_w}}  claim",
            f"{'-' * id_w}  {'-' * st_w}  {'-' * 40}",
        ]
        for c in self.cases:
            note = f" [{c.reason}]" if c.reason else ""
            lines.append(f"{c.case_id:<{id_w}}  {c.status:<{st_w}}  {c.claim}{note}")
        lines.append(
            f"suite {self.suite}: {self.passed} pass, {self.failed} fail, "
            f"{self.skipped} skipped ({self.wall_time:.2f}s)"
        )
        return "\n".join(lines)


@dataclass
class SuiteOptions:
    max_order: int = 200
    aut_cap: int = 512
    oracle_cap: int = 48
    extension_cap: int = 2000
    slow: bool = False


def _case(case_id: str, groups: tuple[str, ...], claim: str, fn) -> SuiteCase:
    try:
        ok, witness = fn()
        return SuiteCase(case_id, groups, claim, "pass" if ok else "fail", None, witness)
    except Exception as exc:  # a crashed case is a failure carrying its error
        return SuiteCase(case_id, groups, claim, "fail", None, {"error": repr(exc)})


def _skip(case_id: str, groups: tuple[str, ...], claim: str, reason: str) -> SuiteCase:
    return SuiteCase(case_id, groups, claim, "skipped", reason, {})


def _hw(h: SubgroupHandle) -> dict:
    return {"order": h.order, "members": [int(m) for m in h.members]}


def _alternating_handle(G: FiniteGroup) -> SubgroupHandle:
    members = tuple(
        i
        for i, p in enumerate(G.elements)
        if sum(len(c) - 1 for c in p.cycles()) % 2 == 0
    )
    return SubgroupHandle(G, members, normal=True)


# ---------------------------------------------------------------------------
# suites


def _suite_kk(opts: SuiteOptions) -> list[SuiteCase]:
    claim = (
        "the five split characterizations (no proper essential subgroup, "
        "every normal splits, normals inherit, relative splits, socle is the "
        "whole group) agree"
    )
    cases = []
    for name, G in catalog(opts.max_order, aut_cap=opts.aut_cap):
        def fn(G=G):
            rec = split_conditions(G)
            return rec.agree(), {k: bool(v) for k, v in rec.as_dict().items()}

        cases.append(_case(f"kk/{name}", (name,), claim, fn))
    return cases


def _suite_sk(opts: SuiteOptions) -> list[SuiteCase]:
    claim = (
        "for A x B: a proper essential subgroup exists iff one factor has "
        "one, and e(A x B) is the embedded image of e(A) x e(B)"
    )
    cat = catalog(opts.max_order, aut_cap=opts.aut_cap)
    pairs = []
    for i in range(len(cat)):
        for j in range(i, len(cat)):
            if cat[i][1].order * cat[j][1].order <= opts.max_order:
                pairs.append((cat[i], cat[j]))
    pairs = pairs[:48]
    cases = []
    for (na, A), (nb, B) in pairs:
        def fn(A=A, B=B):
            P = direct_product(A, B)
            flag_ok = has_proper_essential(P.group) == (
                has_proper_essential(A) or has_proper_essential(B)
            )
            ia = P.embed_left.image_of[np.array(essential_core(A).members)]
            ib = P.embed_right.image_of[np.array(essential_core(B).members)]
            expected = np.unique(P.group.mul_table[np.ix_(ia, ib)])
            got = np.array(essential_core(P.group).members)
            core_ok = np.array_equal(expected, got)
            witness = {"flag_ok": bool(flag_ok), "core_ok": bool(core_ok)}
            if not core_ok:
                witness["expected"] = [int(x) for x in expected]
                witness["got"] = [int(x) for x in got]
            return flag_ok and core_ok, witness

        cases.append(_case(f"sk/{na}|{nb}", (na, nb), claim, fn))
    return cases


def _suite_pm(opts: SuiteOptions) -> list[SuiteCase]:
    claim = "soc(G) = e(G) and soc(G) is essential (checked against the definitional oracle)"
    cases = []
    for name, G in catalog(opts.max_order, aut_cap=opts.aut_cap):
        def fn(G=G):
            soc = socle(G)
            core = essential_core(G)
            cert = is_essential(G, soc)
            defn = is_essential_definitional(G, soc)
            ok = soc.members == core.members and cert.essential and defn and cert.recheck()
            witness = {"socle_order": soc.order, "core_order": core.order}
            if not ok:
                witness.update({"socle": _hw(soc), "core": _hw(core),
                                "essential": cert.essential, "oracle": defn})
            return ok, witness

        cases.append(_case(f"pm/{name}", (name,), claim, fn))
    return cases


def _suite_jj(opts: SuiteOptions) -> list[SuiteCase]:
    claim = (
        "soc(G) = e(G) holds exactly when soc(G) is essential in e(G) as a "
        "group (both sides computed independently)"
    )
    cases = []
    for name, G in catalog(opts.max_order, aut_cap=opts.aut_cap):
        def fn(G=G):
            soc = socle(G)
            core = essential_core(G)
            lhs = soc.members == core.members
            estar = core.as_group()
            soc_in_estar = SubgroupHandle(
                estar, tuple(sorted(estar.index_of(p) for p in soc.perms()))
            )
            rhs = is_essential(estar, soc_in_estar).essential
            return lhs == rhs and lhs, {"equal": bool(lhs), "essential_in_core": bool(rhs)}

        cases.append(_case(f"jj/{name}", (name,), claim, fn))
    return cases


_SDP_INSTANCES = [(5, 4, 2), (5, 4, 3), (7, 3, 2), (9, 3, 4), (5, 2, 4), (7, 2, 6), (11, 2, 10)]


def _suite_nbk(opts: SuiteOptions) -> list[SuiteCase]:
    cases = []
    for n, m, e in _SDP_INSTANCES:
        spec = f"sdp({n},{m},{e})"
        sd = cyclic_power_semidirect(n, m, e, max_order=opts.max_order)
        G = sd.group
        H = cyclic(m)
        for E in essential_subgroups(H):
            if E.is_whole:
                continue
            def fn(sd=sd, G=G, E=E):
                e_img = sd.embed_acting.image_of[np.array(E.members)]
                members = set(int(x) for x in e_img) | sd.normal_part.member_set
                K = subgroup_generated(G, members)
                ok = (
                    K.order == sd.normal_part.order * E.order
                    and K.is_normal()
                    and not K.is_whole
                    and is_essential(G, K).essential
                    and is_essential_definitional(G, K)
                )
                return ok, {"embedded_order": K.order}

            cases.append(
                _case(
                    f"nbk/embedded/{spec}|C{m}:{E.order}",
                    (spec,),
                    "the acted-on part extended by a proper essential subgroup "
                    "of the acting part is a proper essential subgroup",
                    fn,
                )
            )
        if has_proper_essential(cyclic(n)):
            def fn_n(G=G):
                return has_proper_essential(G), {}

            cases.append(
                _case(
                    f"nbk/normal-part/{spec}",
                    (spec,),
                    "an acted-on part with a proper essential subgroup forces one "
                    "in the whole product",
                    fn_n,
                )
            )
        def fn_ab(G=G, e=e, n=n):
            nontrivial_action = n > 1 and e % n != 1
            return (
                nontrivial_action
                and not G.is_abelian()
                and has_proper_essential(G)
            ), {"abelian": G.is_abelian()}

        cases.append(
            _case(
                f"nbk/abelian-action/{spec}",
                (spec,),
                "abelian parts with a nontrivial action give a proper essential subgroup",
                fn_ab,
            )
        )
    for n, m, e in [(7, 3, 2), (5, 2, 4), (7, 2, 6), (11, 2, 10)]:
        spec = f"sdp({n},{m},{e})"
        def fn_conv(n=n, m=m, e=e):
            G = cyclic_power_semidirect(n, m, e, max_order=opts.max_order).group
            return (
                has_proper_essential(G)
                and not has_proper_essential(cyclic(n))
                and not has_proper_essential(cyclic(m))
            ), {}

        cases.append(
            _case(
                f"nbk/converse-fails/{spec}",
                (spec,),
                "the product has a proper essential subgroup while neither "
                "component does",
                fn_conv,
            )
        )
    return cases


def _suite_khma(opts: SuiteOptions) -> list[SuiteCase]:
    cases = []
    ns = [4, 5] + ([6] if opts.slow else [])
    for n in ns:
        def fn_nat(n=n):
            G = symmetric(n)
            H = _alternating_handle(G)
            res = essential_from_action(G, H, natural_action(G))
            ok = (
                not isinstance(res, StabilizerContainment)
                and res.essential
                and res.subject.members == H.members
                and not res.subject.is_whole
                and is_essential_definitional(G, res.subject)
            )
            return ok, {"subject_order": getattr(getattr(res, "subject", None), "order", None)}

        cases.append(
            _case(
                f"khma/natural/S{n}",
                (f"S{n}",),
                "stabilizers of the even-permutation subgroup form an antichain "
                "under the natural action and certify it as a proper essential subgroup",
                fn_nat,
            )
        )

    def fn_s3():
        G = symmetric(3)
        res = essential_from_action(G, _alternating_handle(G), natural_action(G))
        return isinstance(res, StabilizerContainment), {
            "pair": [res.x, res.y] if isinstance(res, StabilizerContainment) else None
        }

    cases.append(
        _case(
            "khma/natural/S3-antichain-fails",
            ("S3",),
            "the even-permutation stabilizers on 3 points are all trivial, so "
            "the antichain hypothesis fails",
            fn_s3,
        )
    )

    def fn_triv():
        G = direct_product(cyclic(2), cyclic(2)).group
        H = subgroup_generated(G, [1])
        res = essential_from_action(G, H, trivial_action(G, 2))
        return res == StabilizerContainment(0, 1), {}

    cases.append(
        _case(
            "khma/trivial-action",
            ("C2 x C2",),
            "a trivial action makes all stabilizers equal: the hypothesis fails",
            fn_triv,
        )
    )

    coset_instances = []
    s4 = symmetric(4)
    sylow2 = subgroup_generated(
        s4,
        [
            s4.index_of(Perm.from_cycles(4, [(0, 1, 2, 3)])),
            s4.index_of(Perm.from_cycles(4, [(0, 2)])),
        ],
    )
    coset_instances.append(("S4", s4, sylow2))
    f20 = cyclic_power_semidirect(5, 4, 2)
    coset_instances.append(("sdp(5,4,2)", f20.group, f20.acting_part))
    d10 = dihedral(10)
    coset_instances.append(
        ("D10", d10, subgroup_generated(d10, [d10.gen_indices[1]]))
    )
    for label, G, S in coset_instances:
        def fn_coset(G=G, S=S):
            H = normal_closure(G, S)
            res = essential_from_action(G, H, coset_action(G, S))
            ok = (
                not isinstance(res, StabilizerContainment)
                and res.essential
                and res.recheck()
                and is_essential_definitional(G, res.subject)
            )
            return ok, {"closure_order": H.order, "subject_order": res.subject.order
                        if not isinstance(res, StabilizerContainment) else None}

        cases.append(
            _case(
                f"khma/coset/{label}",
                (label,),
                "the normal closure of a self-normalizing subgroup passes the "
                "antichain test under the coset action and certifies essential",
                fn_coset,
            )
        )
    return cases


def _scan_certify(opts: SuiteOptions, predicate, certify, label: str, claim: str):
    cases = []
    for name, G in catalog(
        min(opts.max_order, opts.oracle_cap), aut_cap=opts.aut_cap
    ):
        def fn(G=G):
            whole = proper = 0
            violation = None
            for S in all_subgroups(G, cap=opts.oracle_cap):
                if not predicate(G, S):
                    continue
                res = certify(G, S)
                if isinstance(res, WholeGroup):
                    whole += 1
                    if not res.closure.is_whole:
                        violation = {"subgroup": _hw(S), "kind": "bad-whole"}
                else:
                    proper += 1
                    if not (
                        res.essential
                        and not res.subject.is_whole
                        and res.recheck()
                        and is_essential_definitional(G, res.subject)
                    ):
                        violation = {"subgroup": _hw(S), "kind": "bad-certificate"}
            witness = {
                "qualifying": whole + proper,
                "whole_branch": whole,
                "proper_branch": proper,
            }
            if violation:
                witness["violation"] = violation
            return violation is None, witness

        cases.append(_case(f"{label}/{name}", (name,), claim, fn))
    return cases


def _suite_babcho(opts: SuiteOptions) -> list[SuiteCase]:
    return _scan_certify(
        opts,
        lambda G, S: is_self_normalizing(G, S),
        essential_from_self_normalizing,
        "babcho",
        "normal closures of self-normalizing subgroups are the whole group or "
        "certified proper essential (branch distribution reported)",
    )


def _suite_malnormal(opts: SuiteOptions) -> list[SuiteCase]:
    return _scan_certify(
        opts,
        lambda G, S: not S.is_trivial and is_malnormal(G, S),
        essential_from_malnormal,
        "malnormal",
        "normal closures of nontrivial malnormal subgroups are the whole group "
        "or certified proper essential (branch distribution reported)",
    )


def _suite_sym(opts: SuiteOptions) -> list[SuiteCase]:
    cases = []
    ns = [3, 4, 5] + ([6] if opts.slow else [])
    for n in ns:
        def fn_ess(n=n):
            G = symmetric(n)
            A = _alternating_handle(G)
            cert = is_essential(G, A)
            ok = (
                cert.essential
                and not A.is_whole
                and cert.recheck()
                and is_essential_definitional(G, A)
            )
            return ok, {"alternating_order": A.order}

        cases.append(
            _case(
                f"sym/essential/S{n}",
                (f"S{n}",),
                "the even permutations form a proper essential subgroup",
                fn_ess,
            )
        )

        def fn_indec(n=n):
            G = symmetric(n)
            lat = normal_subgroups(G)
            bad = []
            for N in lat.normals:
                if N.is_trivial or N.is_whole:
                    continue
                if normal_complement(G, N) is not None:
                    bad.append(_hw(N))
            return not bad, ({"complemented": bad} if bad else {"proper_normals": len(lat) - 2})

        cases.append(
            _case(
                f"sym/indecomposable/S{n}",
                (f"S{n}",),
                "no nontrivial proper normal subgroup has a normal complement",
                fn_indec,
            )
        )
    return cases


def _z2c_pattern(G: FiniteGroup, opts: SuiteOptions):
    """Does G split as C2 x C with C complete and no index-2 subgroup?

    Returns True/False, or None when the side condition exceeds the
    all-subgroups oracle cap.
    """
    if G.order % 2:
        return False
    unknown = False
    for Z in normal_subgroups(G).normals:
        if Z.order != 2:
            continue
        C = normal_complement(G, Z)
        if C is None:
            continue
        Cg = C.as_group()
        if Cg.order > opts.aut_cap:
            unknown = True
            continue
        if not is_complete(Cg, aut_cap=opts.aut_cap):
            continue
        if Cg.order > opts.oracle_cap:
            unknown = True
            continue
        if all(
            Cg.order // S.order != 2 for S in all_subgroups(Cg, cap=opts.oracle_cap)
        ):
            return True
    return None if unknown else False


def _suite_ma(opts: SuiteOptions) -> list[SuiteCase]:
    claim = (
        "completeness matches splitting across the sampled normal embeddings "
        "(holomorph, x C2, x S3; a sampling decision, not a proof), and every "
        "essentialized embedding is injective with essential image"
    )
    cases = []
    c2 = cyclic(2)
    s3 = symmetric(3)
    for name, G in catalog(opts.max_order, aut_cap=opts.aut_cap):
        if G.order > opts.aut_cap:
            cases.append(_skip(f"ma/{name}", (name,), claim, "aut-cap"))
            continue

        def fn(G=G):
            z = center(G).order
            complete = is_complete(G, aut_cap=opts.aut_cap)
            samples = []
            hol_skipped = None
            if G.order * (G.order // z) <= opts.max_order:
                A = automorphism_group(G, aut_cap=opts.aut_cap)
                if G.order * A.order <= opts.max_order:
                    h = holomorph(G, aut_cap=opts.aut_cap, max_order=opts.max_order)
                    samples.append(("hol", h.group, h.embed_base))
                else:
                    hol_skipped = "order-bound"
            else:
                hol_skipped = "order-bound"
            if G.order * 2 <= opts.max_order:
                dp = direct_product(G, c2, max_order=opts.max_order)
                samples.append(("x_c2", dp.group, dp.embed_left))
            if G.order * 6 <= opts.max_order:
                dp = direct_product(G, s3, max_order=opts.max_order)
                samples.append(("x_s3", dp.group, dp.embed_left))
            if not samples:
                return True, {"complete": complete, "samples": {}, "note": "no ambient fits"}
            splits = {}
            ess_ok = True
            for label, amb, emb in samples:
                img = emb.image_handle()
                splits[label] = normal_complement(amb, img) is not None
                Q, psi, _T = essentialize(emb)
                psi_img = psi.image_handle()
                if not (
                    psi.mono
                    and is_essential(Q, psi_img).essential
                    and is_essential_definitional(Q, psi_img)
                ):
                    ess_ok = False
            witness = {
                "complete": complete,
                "splits": {k: bool(v) for k, v in splits.items()},
                "hol_skipped": hol_skipped,
                "essentialize_ok": ess_ok,
            }
            if complete:
                return all(splits.values()) and ess_ok, witness
            if not all(splits.values()):
                return ess_ok, witness
            pattern = _z2c_pattern(G, opts)
            witness["z2c_pattern"] = pattern
            if "hol" in splits and pattern is False:
                return False, witness  # contradicts the holomorph characterization
            return ess_ok, witness

        cases.append(_case(f"ma/{name}", (name,), claim, fn))
    return cases


def _suite_abelian_ext(opts: SuiteOptions) -> list[SuiteCase]:
    claim = (
        "every nontrivial abelian catalog group embeds as a proper essential "
        "subgroup of its prime-exponent lift (definitional oracle check)"
    )
    cases = []
    for name, G in catalog(opts.max_order, aut_cap=opts.aut_cap):
        if not G.is_abelian() or G.order == 1:
            continue
        dec = abelian_primary_decomposition(G)
        ext_order = 1
        index = 1
        for f in dec.factors:
            ext_order *= f.prime ** (f.exponent + 1)
            index *= f.prime
        if ext_order > opts.extension_cap:
            cases.append(_skip(f"abelian_ext/{name}", (name,), claim, "order-bound"))
            continue

        def fn(G=G, ext_order=ext_order, index=index):
            ext, emb = abelian_essential_extension(G, max_order=opts.extension_cap)
            img = emb.image_handle()
            img._normal = True
            ok = (
                emb.mono
                and ext.order == ext_order
                and not img.is_whole
                and ext.order == img.order * index
                and is_essential_definitional(ext, img)
            )
            if G.order <= 200:
                emb.validate_exhaustive()
            return ok, {"extension_order": ext.order, "index": index}

        cases.append(_case(f"abelian_ext/{name}", (name,), claim, fn))
    return cases


def _suite_bchche(opts: SuiteOptions) -> list[SuiteCase]:
    claim = (
        "the translation copy splits off the holomorph exactly for complete "
        "groups and for C2 x C with C complete lacking index-2 subgroups"
    )
    cases = []
    for name, G in catalog(opts.max_order, aut_cap=opts.aut_cap):
        cid = f"bchche/{name}"
        if G.order > opts.aut_cap:
            cases.append(_skip(cid, (name,), claim, "aut-cap"))
            continue
        z = center(G).order
        if G.order * (G.order // z) > opts.max_order:
            cases.append(_skip(cid, (name,), claim, "order-bound"))
            continue
        A = automorphism_group(G, aut_cap=opts.aut_cap)
        if G.order * A.order > opts.max_order:
            cases.append(_skip(cid, (name,), claim, "order-bound"))
            continue

        hol = holomorph(G, aut_cap=opts.aut_cap, max_order=opts.max_order)
        split = normal_complement(hol.group, hol.base_image) is not None
        complete = z == 1 and A.out_order == 1
        pattern = _z2c_pattern(G, opts)
        if pattern is None and split != complete:
            cases.append(
                _skip(cid, (name,), claim, "z2c-side-condition-beyond-oracle-cap")
            )
            continue

        def fn(split=split, complete=complete, pattern=pattern):
            expected = complete or bool(pattern)
            return split == expected, {
                "split": bool(split),
                "complete": bool(complete),
                "z2c_pattern": bool(pattern) if pattern is not None else None,
            }

        cases.append(_case(cid, (name,), claim, fn))
    return cases


def _suite_hol_remark(opts: SuiteOptions) -> list[SuiteCase]:
    def fn_c2():
        h = holomorph(cyclic(2), aut_cap=opts.aut_cap, max_order=opts.max_order)
        return is_isomorphic(h.group, cyclic(2)), {"hol_order": h.group.order}

    cases = [
        _case(
            "hol_remark/Hol(C2)",
            ("C2",),
            "the holomorph of C2 is C2 again",
            fn_c2,
        )
    ]
    claim = (
        "for a non-complete group whose center does not have order 2, the "
        "holomorph has a proper essential subgroup"
    )
    for name, G in catalog(opts.max_order, aut_cap=opts.aut_cap):
        cid = f"hol_remark/{name}"
        z = center(G).order
        if z == 2:
            continue
        if G.order > opts.aut_cap:
            cases.append(_skip(cid, (name,), claim, "aut-cap"))
            continue
        if G.order * (G.order // z) > opts.max_order:
            cases.append(_skip(cid, (name,), claim, "order-bound"))
            continue
        A = automorphism_group(G, aut_cap=opts.aut_cap)
        if z == 1 and A.out_order == 1:
            continue  # complete: out of the statement's scope
        if G.order * A.order > opts.max_order:
            cases.append(_skip(cid, (name,), claim, "order-bound"))
            continue

        def fn(G=G):
            hol = holomorph(G, aut_cap=opts.aut_cap, max_order=opts.max_order)
            return has_proper_essential(hol.group), {"hol_order": hol.group.order}

        cases.append(_case(cid, (name,), claim, fn))
    return cases


REGISTRY: dict[str, tuple[str, object]] = {
    "kk": ("split characterizations agree", _suite_kk),
    "sk": ("essential structure distributes over direct products", _suite_sk),
    "pm": ("socle equals the essential core and is essential", _suite_pm),
    "jj": ("socle/essential-core equality matches essentiality inside the core", _suite_jj),
    "nbk": ("essential subgroups of power-action semidirect products", _suite_nbk),
    "khma": ("stabilizer antichains certify essential subgroups from actions", _suite_khma),
    "babcho": ("self-normalizing closures: whole group or proper essential", _suite_babcho),
    "malnormal": ("malnormal closures: whole group or proper essential", _suite_malnormal),
    "sym": ("even permutations essential; symmetric groups indecomposable", _suite_sym),
    "ma": ("completeness vs splitting of sampled embeddings; essentialization", _suite_ma),
    "abelian_ext": ("constructive proper essential extensions of abelian groups", _suite_abelian_ext),
    "bchche": ("holomorph splitting characterization", _suite_bchche),
    "hol_remark": ("holomorphs of suitable non-complete groups have proper essentials", _suite_hol_remark),
}

ALIASES = {"nkb": "nbk"}


def suite_names() -> list[str]:
    return list(REGISTRY) + ["all"]


def run_suite(name: str, options: SuiteOptions | None = None, **kw) -> VerificationReport:
    """Run one registered suite (or "all") and return its report."""
    opts = options or SuiteOptions(**kw)
    name = ALIASES.get(name, name)
    start = time.perf_counter()
    if name == "all":
        cases = []
        for sub in REGISTRY:
            sub_cases = REGISTRY[sub][1](opts)
            for c in sub_cases:
                c.case_id = f"all/{c.case_id}"
            cases.extend(sub_cases)
        return VerificationReport("all", cases, time.perf_counter() - start)
    if name not in REGISTRY:
        raise UnknownSuite(
            f"unknown suite {name!r}; known: {', '.join(suite_names())}"
        )
    cases = REGISTRY[name][1](opts)
    return VerificationReport(name, cases, time.perf_counter() - start)
