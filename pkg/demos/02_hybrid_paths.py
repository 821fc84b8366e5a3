"""
Hybrid lattice paths
====================

Each coefficient is a signed sum over lattice paths.  For ``n < 0`` the paths
use south steps and east-south combinations.
"""

import os
import tempfile
from pathlib import Path

from wbinom import HybridPath, enumerate_paths, path_sum, path_weight_steps, wbinom
from wbinom.paths import inner_corners, path_to_subset
from wbinom.svg import render_path

for p in enumerate_paths(2, -4):
    print(f"{str(p):<12} {str(path_to_subset(p)):<10} {path_weight_steps(p)}")

print("sum equals C(-2,2):", path_sum(2, -4) == wbinom(-2, 2))

###############################################################################
# Inner corners of a mixed path

p = HybridPath.parse("S ES S ES")
print(p, "->", inner_corners(p))

###############################################################################
# Render a few paths to SVG

out = Path(os.environ.get("WBINOM_OUTPUT_DIR", tempfile.mkdtemp(prefix="wbinom-demo-")))
out.mkdir(parents=True, exist_ok=True)
for name in ["E N E N E E", "S ES S ES", "W NW W NW"]:
    target = out / (name.replace(" ", "_") + ".svg")
    target.write_text(render_path(HybridPath.parse(name)))
print("svg files in", out)
