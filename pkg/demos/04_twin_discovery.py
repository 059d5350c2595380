"""
Finding the twins at random
===========================

Draw random pairs in SL2(F7), keep those whose images have orders 3, 3, 4
and generate PSL2(F7), then sort the resulting kernels. Only two kernels turn up,
one for each prime above 7.
"""

from bolza import modp

seed = 7
classes: dict = {}
for n, (trial, spec) in enumerate(modp.random_334_pairs(7, seed)):
    label = str(modp.classify_kernel(spec))
    classes[label] = classes.get(label, 0) + 1
    if n >= 39:
        break
print(f"seed {seed}, last trial {trial}")
for label, count in classes.items():
    print(f"  kernel {label}: {count} pairs")
