"""
The command line
================

Every check is also a subcommand. Reports are JSON lines on stdout, with a
summary on stderr; reruns with the same seed are byte-identical.
"""

import subprocess
import sys


def phaselab(*args, stdin=None):
    out = subprocess.run([sys.executable, "-m", "phaselab", *args], input=stdin, capture_output=True, text=True)
    print("$ phaselab", " ".join(args), f"(exit {out.returncode})")
    print(out.stdout.strip() or out.stderr.strip())
    return out.stdout


frame = phaselab("gen", "rd-family", "--d", "3")
phaselab("check", "frame", "--pr", "--scalable", stdin=frame)
perps = phaselab("perp", stdin=frame)
phaselab("check", "arrangement", "--edidin-witness", "1", "1", "1", stdin=perps)
phaselab("sturm", "--f0")

# malformed input exits with status 2 and names the field
phaselab("check", "frame", stdin='{"dim": 2, "vectors": [["1", "x"]]}')
