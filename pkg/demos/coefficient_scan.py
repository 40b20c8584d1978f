"""Look for log-concavity failures among random Eulerian digraphs.

Run with ``python3 demos/coefficient_scan.py [count]``.
"""

import sys

from eulerian_alexander.scanner import ScanConfig, scan

count = int(sys.argv[1]) if len(sys.argv) > 1 else 500
print(scan(ScanConfig(vertices=(2, 7), edges=(2, 14), count=count, seed=2024)).to_text())

print("Digraphs with equal multiplicities both ways:")
print(scan(ScanConfig(vertices=(2, 6), edges=(2, 12), count=count // 5, seed=2024, symmetric=True)).to_text())
