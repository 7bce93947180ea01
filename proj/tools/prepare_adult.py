#!/usr/bin/env python3
# Copyright 2026 The prgain Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Merges the UCI Adult adult.data and adult.test files into one CSV.

Usage: prepare_adult.py ADULT_DATA ADULT_TEST OUTPUT_CSV

Cells are trimmed, the trailing period on test-set labels is removed and
non-record lines (blank lines, the "|1x3 Cross validator" banner) are
skipped. The result has a header row and 48842 records.
"""

import argparse
import csv
import sys

COLUMNS = [
    "age", "workclass", "fnlwgt", "education", "education-num",
    "marital-status", "occupation", "relationship", "race", "sex",
    "capital-gain", "capital-loss", "hours-per-week", "native-country",
    "income",
]


def records(path):
  with open(path, newline="") as f:
    for line in f:
      line = line.strip()
      if not line or line.startswith("|"):
        continue
      cells = [c.strip() for c in line.split(",")]
      if len(cells) != len(COLUMNS):
        raise ValueError(f"{path}: unexpected record {line!r}")
      cells[-1] = cells[-1].rstrip(".")
      yield cells


def main(argv):
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  parser.add_argument("adult_data")
  parser.add_argument("adult_test")
  parser.add_argument("output")
  args = parser.parse_args(argv)
  count = 0
  with open(args.output, "w", newline="") as out:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COLUMNS)
    for path in (args.adult_data, args.adult_test):
      for cells in records(path):
        writer.writerow(cells)
        count += 1
  print(f"wrote {count} records to {args.output}")


if __name__ == "__main__":
  main(sys.argv[1:])
