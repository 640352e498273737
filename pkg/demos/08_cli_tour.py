"""The same computations through the command-line entry point.

Run: python demos/08_cli_tour.py   (or call `dioph ...` directly)
"""
# %%
import shlex

from dioph.cli import run

for cmd in ["dp-member --field GF(3) t^9",
            "as-solve --field GF(3) t --output text",
            "model add 1 2 --output text",
            "pell mulrel 2 3 6 --output text",
            "formula eval --field GF(3) --bound 4 --bind x=(t^3) 'E u . x + 2*t = u^3 + 2*u'"]:
    code, out = run(shlex.split(cmd))
    print(f"$ dioph {cmd}   [exit {code}]\n{out}\n")
