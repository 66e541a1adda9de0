# src/corpus/modalities.py

"""
?! behaves as an S4 box on propositions and !? as a nucleus on problems; double
negation satisfies the same nucleus laws inside QH.
"""

from corpus.registry import corpus_entry

BOX = "?! is an S4 box"
NABLA = "!? is a nucleus"
NEGNEG = "~~ is a nucleus in QH"


@corpus_entry("box.1", "?!p -> p", anchor=BOX)
def box_1(b):
    return b.axiom("wn_oc", P="p")


@corpus_entry("box.2", "?!p -> ?!?!p", anchor=BOX)
def box_2(b):
    return b.monotone_wn(b.axiom("oc_wn", A="!p"))


@corpus_entry("box.3", "p |- ?!p", anchor=BOX)
def box_3(b):
    return b.wn(b.oc(b.hyp(1)))


@corpus_entry("box.4", "?!(p -> q) -> (?!p -> ?!q)", anchor=BOX)
def box_4(b):
    inner = b.monotone_wn(b.axiom("oc_imp", P="p", Q="q"))
    return b.syl(inner, b.axiom("wn_imp", A="!p", B="!q"))


@corpus_entry("box.star", "p -> q |- ?!p -> ?!q", anchor=BOX)
def box_monotone(b):
    return b.monotone_box(b.hyp(1))


@corpus_entry("nabla.1", "a -> !?a", anchor=NABLA)
def nabla_1(b):
    return b.axiom("oc_wn", A="a")


@corpus_entry("nabla.2", "!?!?a -> !?a", anchor=NABLA)
def nabla_2(b):
    return b.monotone_oc(b.axiom("wn_oc", P="?a"))


@corpus_entry("nabla.3", "!?bot -> bot", anchor=NABLA)
def nabla_3(b):
    return b.syl(b.monotone_oc(b.lemma("sym.wn_bot")), b.axiom("oc_bot"))


@corpus_entry("nabla.4", "!?(a -> b) -> (!?a -> !?b)", anchor=NABLA)
def nabla_4(b):
    inner = b.monotone_oc(b.axiom("wn_imp", A="a", B="b"))
    return b.syl(inner, b.axiom("oc_imp", P="?a", Q="?b"))


@corpus_entry("nabla.3r", "~a |- ~!?a", anchor=NABLA)
def nabla_3_rule(b):
    return b.syl(b.monotone_nabla(b.hyp(1)), b.lemma("nabla.3"))


@corpus_entry("nabla.star", "a -> b |- !?a -> !?b", anchor=NABLA)
def nabla_monotone(b):
    return b.monotone_nabla(b.hyp(1))


@corpus_entry("negneg.1", "a -> ~~a", calculus="QH", anchor=NEGNEG)
def negneg_1(b):
    return b.lemma("ipc.dni")


@corpus_entry("negneg.2", "~~~~a -> ~~a", calculus="QH", anchor=NEGNEG)
def negneg_2(b):
    return b.lemma("ipc.tne", a="~a")


@corpus_entry("negneg.3", "~~bot -> bot", calculus="QH", anchor=NEGNEG)
def negneg_3(b):
    h = b.assume("~~bot")
    return b.discharge(h, b.mp(h, b.identity("bot")))


@corpus_entry("negneg.4", "~~(a -> b) -> (~~a -> ~~b)", calculus="QH", anchor=NEGNEG)
def negneg_4(b):
    return b.lemma("ipc.nnimp")
