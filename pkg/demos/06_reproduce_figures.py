"""End-to-end reproduction of the two relaxation figures.

Drives the command-line interface: runs the fig1 preset (oscillator,
f = 1..4, with the Caldeira-Leggett baseline) and the fig2 preset (well,
f = 1.5..6), then renders the two 4 x 4 panel images with the secondary
figrender package.  Output lands in ./figure_output.
"""

import pathlib
import subprocess
import sys

outdir = pathlib.Path("figure_output")
outdir.mkdir(exist_ok=True)

for preset, variant in (("fig1", "both"), ("fig2", "proposed")):
    print(f"running {preset} preset ({variant})...")
    subprocess.run(
        [sys.executable, "-m", "qsthermo", preset, "--variant", variant,
         "--outdir", str(outdir)],
        check=True,
    )

f1 = [str(outdir / f"fig1_f{k}.csv") for k in (1, 2, 3, 4)]
f1_cl = [str(outdir / f"fig1_f{k}_cl.csv") for k in (1, 2, 3, 4)]
subprocess.run(
    [sys.executable, "-m", "figrender.cli", "--preset", "fig1",
     "--csv", *f1, "--baseline", *f1_cl,
     "--labels", "f=1", "f=2", "f=3", "f=4",
     "--out", str(outdir / "oscillator_panel.png")],
    check=True,
)

f2 = [str(outdir / f"fig2_f{tag}.csv") for tag in ("1p5", "3", "4p5", "6")]
subprocess.run(
    [sys.executable, "-m", "figrender.cli", "--preset", "fig2",
     "--csv", *f2, "--labels", "f=1.5", "f=3", "f=4.5", "f=6",
     "--out", str(outdir / "well_panel.png")],
    check=True,
)
print("wrote", outdir / "oscillator_panel.png", "and", outdir / "well_panel.png")
