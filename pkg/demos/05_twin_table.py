"""
The table of twins
==================

For each prime ideal over 7, 17, 23, 31, 41, 47 and 71, take the lowest-trace
word on record, and check its congruence and trace again. Then compare the
trace with the bound N(I)^2/4 - 2.
"""

from bolza import bounds

table = bounds.twin_table()
print(table.markdown())

# the systole that the lowest trace would give
for row in table.rows[:4]:
    print(row.ideal, round(bounds.sys_from_trace(row.trace), 4))

# the genus bound for the family
print(bounds.check_43(g=15).to_json())
