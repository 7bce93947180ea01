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
"""Converts the UCI Bank Marketing bank-full.csv (semicolon separated) to a
comma separated CSV readable by prgain.

Usage: prepare_bank.py BANK_FULL_CSV OUTPUT_CSV
"""

import argparse
import csv
import sys


def main(argv):
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  parser.add_argument("bank_full")
  parser.add_argument("output")
  args = parser.parse_args(argv)
  count = 0
  with open(args.bank_full, newline="") as src, \
       open(args.output, "w", newline="") as out:
    reader = csv.reader(src, delimiter=";")
    writer = csv.writer(out, lineterminator="\n")
    for i, row in enumerate(reader):
      writer.writerow([c.strip() for c in row])
      count += i > 0
  print(f"wrote {count} records to {args.output}")


if __name__ == "__main__":
  main(sys.argv[1:])
