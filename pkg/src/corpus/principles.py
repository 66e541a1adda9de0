# src/corpus/principles.py

"""
Consequences of the principles in corpus.theories, each proved in the smallest
extension of QHC that carries it. Equivalences between principles appear as a
pair of entries, one in each extension, since an axiom cannot be discharged.
"""

from corpus.registry import corpus_entry

KIH = "stability implies no-ignorabimus"
HK = "no-ignorabimus against stability"
JANKOV = "decidability, weak excluded middle and exclusive disjunction"


# ---- !? against ~~ ----

@corpus_entry("kih.a.bwd", "~~a -> !?a", calculus="QHC+HNIP", anchor=KIH)
def negneg_below_nabla_from_hnip(b):
    semi = b.mp(b.monotone_wn(b.lemma("ipc.ornot", b="~a")), b.axiom("HNIP", A="a"))
    spread = b.mp(b.lemma("nabla.4", a="~~a", b="a"), b.oc(semi))
    return b.syl(b.axiom("oc_wn", A="~~a"), spread)


@corpus_entry("kih.a", "!?a <-> ~~a", calculus="QHC+HNIP", anchor=KIH)
def nabla_is_negneg_from_hnip(b):
    return b.iff(b.lemma("nabla_negneg1"), b.lemma("kih.a.bwd"))


@corpus_entry("kih.a.conv", "?(a | ~a)", calculus="QHC+NN", anchor=KIH)
def hnip_from_nabla_negneg(b):
    up = b.right(b.axiom("NN", A="a | ~a"))
    return b.lemma("oc_reverse", b.mp(up, b.lemma("ipc.nnlem")))


@corpus_entry("kih.b.bwd", "~~a -> !?a", calculus="QHC+KSP", anchor=KIH)
def negneg_below_nabla_from_ksp(b):
    return b.syl(b.contrapose(b.lemma("insolubility.bwd")), b.axiom("KSP", P="?a"))


@corpus_entry("kih.b", "!?a <-> ~~a", calculus="QHC+KSP", anchor=KIH)
def nabla_is_negneg_from_ksp(b):
    return b.iff(b.lemma("nabla_negneg1"), b.lemma("kih.b.bwd"))


# ---- stability principle and semi-decidability ----

@corpus_entry("hk.hnip_from_ksp", "?(a | ~a)", calculus="QHC+KSP", anchor=HK)
def hnip_from_ksp(b):
    nabla = b.mp(b.lemma("kih.b.bwd", a="a | ~a"), b.lemma("ipc.nnlem"))
    return b.lemma("oc_reverse", nabla)


@corpus_entry("hk.a.fwd", "?(!p | !~p)", calculus="QHC+KSP", anchor=HK)
def semi_decidable_props_from_ksp(b):
    commute = b.mp(b.lemma("nc.b.fwd"), b.axiom("KSP", P="~p"))
    swap = b.monotone_wn(b.disj_map(b.identity("!p"), commute))
    return b.mp(swap, b.lemma("hk.hnip_from_ksp", a="!p"))


@corpus_entry("hk.a.bwd", "~!~p -> !p", calculus="QHC+SDP", anchor=HK)
def ksp_from_semi_decidable_props(b):
    semi = b.mp(b.monotone_wn(b.lemma("sd.dec_stable")), b.axiom("SDP", P="p"))
    return b.lemma("ssd.a", semi)


@corpus_entry("hk.b.1to2", "?(!?a | ~!?a)", calculus="QHC+HNIP", anchor=HK)
def semi_decidable_nabla_from_hnip(b):
    return b.axiom("HNIP", A="!?a")


@corpus_entry("hk.b.2to4", "?(!?a | ~!?a) -> ?(~~!?a -> !?a)", anchor=HK)
def semi_stable_nabla_from_semi_decidable(b):
    return b.monotone_wn(b.lemma("ipc.ornot", a="!?a", b="~!?a"))


@corpus_entry("hk.b.4to3.law", "!?(~~!?a -> !?a) -> (~~!?a -> !?a)", anchor=HK)
def stable_nabla_from_semi_stable_law(b):
    drop = b.lemma("move_oc_wn.b3", a="~~!?a", q="?a")
    return b.syl(drop, b.imp_map(b.axiom("oc_wn", A="~~!?a"), b.identity("!?a")))


@corpus_entry("hk.b.4to3", "?(~~!?a -> !?a) |- ~~!?a -> !?a", anchor=HK)
def stable_nabla_from_semi_stable(b):
    return b.mp(b.oc(b.hyp(1)), b.lemma("hk.b.4to3.law"))


@corpus_entry("hk.b.3to1", "~~!?(a | ~a) -> !?(a | ~a) |- ?(a | ~a)", anchor=HK)
def hnip_from_stable_nabla(b):
    lift = b.contrapose(b.contrapose(b.axiom("oc_wn", A="a | ~a")))
    nabla = b.mp(b.hyp(1), b.mp(lift, b.lemma("ipc.nnlem")))
    return b.lemma("oc_reverse", nabla)


# ---- exclusive disjunction ----

@corpus_entry("jankov.a.rule", "!?a | ~!?a |- ~a | ~~a", anchor=JANKOV)
def wlem_from_decidable_nabla(b):
    to_right = b.syl(b.lemma("nabla_negneg1"), b.axiom("or_r", A="~a", B="~~a"))
    to_left = b.syl(b.lemma("move_nabla.fwd"), b.axiom("or_l", A="~a", B="~~a"))
    return b.cases(b.hyp(1), to_right, to_left)


@corpus_entry("jankov.a", "~a | ~~a", calculus="QHC+DN", anchor=JANKOV)
def wlem_from_dn(b):
    return b.lemma("jankov.a.rule", b.axiom("DN", A="a"))


@corpus_entry("jankov.b.wlem_demorgan", "~a | ~~a |- ~(a & b) -> ~a | ~b", anchor=JANKOV)
def demorgan_from_wlem(b):
    h = b.assume("~(a & b)")
    to_left = b.axiom("or_l", A="~a", B="~b")
    to_right = b.syl(b.mp(b.lemma("ipc.nand"), h), b.axiom("or_r", A="~a", B="~b"))
    return b.discharge(h, b.cases(b.hyp(1), to_left, to_right))


@corpus_entry("jankov.b.demorgan", "~(a & b) -> ~a | ~b", calculus="QHC+WLEM", anchor=JANKOV)
def demorgan_in_wlem(b):
    return b.lemma("jankov.b.wlem_demorgan", b.axiom("WLEM", A="a"))


def _refuted_side(b, refuted: str, ds: str):
    """~x -> (!?(a | b) -> !?y) where y is the disjunct that survives ~x."""
    n = b.assume(refuted)
    d = b.assume("!?(a | b)")
    both = b.conj(d, b.mp(b.axiom("oc_wn", A=refuted), n))
    joined = b.mp(b.lemma("nabla_and.bwd", a="a | b", b=refuted), both)
    return n, d, b.mp(b.monotone_nabla(b.lemma(ds)), joined)


@corpus_entry("jankov.b.law", "~a | ~b -> (!?(a | b) -> !?a | !?b)", anchor=JANKOV)
def exclusive_disjunction_law(b):
    n, d, got = _refuted_side(b, "~a", "ipc.ds")
    from_a = b.discharge(n, b.discharge(d, b.or_r(got, "!?a")))
    n, d, got = _refuted_side(b, "~b", "ipc.ds.r")
    from_b = b.discharge(n, b.discharge(d, b.or_l(got, "!?b")))
    cases = b.axiom("or_e", A="~a", B="~b", C="!?(a | b) -> !?a | !?b")
    return b.mp(from_b, b.mp(from_a, cases))


@corpus_entry("jankov.b.rule", "~(a & b) |- !?(a | b) -> !?a | !?b", calculus="QHC+WLEM", anchor=JANKOV)
def exclusive_disjunction_in_wlem(b):
    either = b.mp(b.lemma("jankov.b.demorgan"), b.hyp(1))
    return b.mp(b.lemma("jankov.b.law"), either)


@corpus_entry("jankov.c.fwd1", "?(a | ~a)", calculus="QHC+DN", anchor=JANKOV)
def hnip_from_dn(b):
    decided = b.mp(b.lemma("sd.a.decidable_conv"), b.axiom("DN", A="a"))
    return b.mp(b.lemma("ssd.b.fwd"), b.wn(decided))


@corpus_entry("jankov.c.fwd2", "~(a & b) |- !?(a | b) -> !?a | !?b", calculus="QHC+DN", anchor=JANKOV)
def exclusive_disjunction_from_dn(b):
    demorgan = b.lemma("jankov.b.wlem_demorgan", b.lemma("jankov.a"))
    return b.mp(b.lemma("jankov.b.law"), b.mp(demorgan, b.hyp(1)))


@corpus_entry("jankov.c.bwd", "!?a | ~!?a", calculus="QHC+HNIP+EDR", anchor=JANKOV)
def dn_from_hnip_and_exclusive_disjunction(b):
    semi = b.oc(b.axiom("HNIP", A="!?a"))
    split = b.rule("EDR", b.lemma("ipc.noncontra", a="!?a"))
    strip = b.disj_map(b.lemma("nabla.2"), b.lemma("move_nabla.nabla_bwd", a="!?a"))
    return b.mp(strip, b.mp(split, semi))


@corpus_entry("jankov.d.fwd1", "~!~p -> !p", calculus="QHC+DP", anchor=JANKOV)
def ksp_from_dp(b):
    return b.mp(b.lemma("sd.dec_stable"), b.axiom("DP", P="p"))


@corpus_entry("jankov.d.fwd2", "~(a & b) |- !?(a | b) -> !?a | !?b", calculus="QHC+DP", anchor=JANKOV)
def exclusive_disjunction_from_dp(b):
    decided = b.mp(b.lemma("sd.a.decidable", p="?a"), b.axiom("DP", P="?a"))
    demorgan = b.lemma("jankov.b.wlem_demorgan", b.lemma("jankov.a.rule", decided))
    return b.mp(b.lemma("jankov.b.law"), b.mp(demorgan, b.hyp(1)))


@corpus_entry("jankov.d.bwd", "!p | !~p", calculus="QHC+KSP+EDR", anchor=JANKOV)
def dp_from_ksp_and_exclusive_disjunction(b):
    semi = b.oc(b.lemma("hk.a.fwd"))
    exclusive = b.chain(b.lemma("sym.oc_and.fwd", q="~p"),
                        b.monotone_oc(b.lemma("cpc.noncontra")),
                        b.axiom("oc_bot"))
    split = b.rule("EDR", exclusive)
    strip = b.disj_map(b.lemma("galois.oc_idem.fwd"), b.lemma("galois.oc_idem.fwd", p="~p"))
    return b.mp(strip, b.mp(split, semi))
