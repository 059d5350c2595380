"""
Two congruence covers of genus 8
================================

The prime 7 splits in Z[sqrt2]. Each prime above it gives a surjection of the
(3,3,4) triangle group onto PSL2(F7). The kernels are torsion free, of index
168, so the covers have genus 1 + 168/24 = 8.
"""

from bolza import cosets, modp
from bolza.words import REGISTRY, eval_word

for spec in modp.reduction_reps(7):
    rep = cosets.cover_report(spec)
    print(spec.ideal, "index", rep.index, "genus", rep.genus, "torsion free", rep.torsion_free)
    print("   least Schreier trace", rep.min_trace, "from", rep.min_trace_word)

# the same numbers from a presentation, by coset enumeration
for key in ("p7_1", "p7_2"):
    w = REGISTRY[key].word
    order = cosets.group_order(cosets.TRIANGLE_334.with_relators(w))
    print(w, "order of quotient:", order, "trace:", eval_word(w).trace())

# a bounded search over short words; a candidate, not a certified systole
print(cosets.min_trace_scan(modp.split_rep("1+2*r2"), max_len=12))
