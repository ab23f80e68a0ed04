#!/usr/bin/env python3
"""The curated SO(7) table: smooth closures versus Arthur type, with the
published consistency rule machine-checked."""

from voganlab.datasets import dataset_check, dataset_table, load_dataset

doc = load_dataset("so7-cfmmx16")
print(doc["description"], "\n")
print(dataset_table(doc))

problems = dataset_check(doc)
print("consistency rule:", doc["check_rule"])
print("violations:", problems if problems else "none")

print("\nnotes:")
for note in doc["notes"]:
    print(" -", note)
print("\nsource:", doc["provenance"])
