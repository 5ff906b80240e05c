# Knot input files and the command-line interface.

# %%
import json
import tempfile
from pathlib import Path

from twistalex.cli import main
from twistalex.textio import parse_input

WIRTINGER = """\
knot trefoil-wirtinger
presentation
gens: a b
rel: a b a b^-1 a^-1 b^-1
"""
P = parse_input(WIRTINGER).presentation()
print("generators:", P.generators)
print("relators:", [P.word_string(r) for r in P.relators])

# %%
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "trefoil.knot"
    path.write_text(WIRTINGER)
    main(["alexander", str(path)])

# %%
# JSON output is deterministic; exit status 2 would flag a failed check.
status = main(["run", "figure8", "--format", "json"])
print("exit status:", status)
