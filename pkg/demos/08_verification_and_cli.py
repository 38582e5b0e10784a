"""
Verification suites and the command line
========================================

Every cross-check is packaged as a named, seeded suite. The same suites run
from the shell with `qchanghee verify --suite all --seed 7`.
"""

import subprocess
import sys

from qchanghee.verify import run_suite

for name in ("classical", "exact", "thm4", "qlimit"):
    print(run_suite(name, samples=20 if name == "thm4" else None).render())

cmd = [sys.executable, "-m", "qchanghee", "qeuler", "--n", "0", "1", "2",
       "--q", "0.5", "--u", "1/3", "--weights", "1", "--dampings", "1"]
print(subprocess.run(cmd, capture_output=True, text=True).stdout)
cmd = [sys.executable, "-m", "qchanghee", "zeta", "--s", "2+1j", "--q", "0.5", "--u", "0.5", "--json"]
print(subprocess.run(cmd, capture_output=True, text=True).stdout)
