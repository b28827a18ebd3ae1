# Data for plotting J3 on 1..50 with point classes, written as CSV.
import csv
import sys

from josephus3 import emit_function_graph

writer = csv.writer(sys.stdout, lineterminator="\n")
writer.writerow(["n", "j", "class"])
for n, j, cls in emit_function_graph(50):
    writer.writerow([n, j, cls])
