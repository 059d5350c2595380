"""
The ring Q/2Q and its unit filtration
=====================================

Q/2Q has 256 elements. Its multiplication table is a 256 x 256 numpy array
built by lifting to the order. Groups are identified from their Cayley tables.
"""

from bolza import quotients as qt

table = qt.mul_table()
print("table shape:", table.shape)
print("units:", len(qt.units()), " norm one:", len(qt.norm_one()))

rep = qt.unit_filtration()
print("unit layers:", rep.layers)
print("norm-one layers:", rep.norm_one_layers)
for key, label in rep.identifications.items():
    print(f"  {key:22s} {label}")

# where the Bolza group sits: the normal closure of the image of delta
pos = qt.bolza_position()
print("delta mod 2:", pos["delta_bar"])
print("normal closure:", pos["normal_closure_order"], pos["normal_closure_type"])
print("index:", pos["index_PQ1_over_B_PQ1(2)"])

# Graphviz source for the filtration
print(rep.diagram)
