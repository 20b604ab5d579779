"""
Rendering frameworks as SVG diagrams
====================================

render_svg() draws joints, bars, pins, and mirror lines, and can overlay a
self-stress (bars coloured by sign, width by magnitude) or a mechanism
(velocity arrows at the joints).  Output is deterministic: the same input
always yields byte-identical SVG.
"""

from pathlib import Path

from symstress import (
    generate,
    mechanism_basis,
    render_svg,
    resolve_group,
    self_stress_basis,
)

out_dir = Path(__file__).resolve().parent / "output"
out_dir.mkdir(exist_ok=True)

# The two-triangle truss again: overlay its unique self-stress.  Tension and
# compression get different colours; the mirror line is drawn dashed.
entry = generate("fig3")
fw = entry.framework
group, center = resolve_group(entry.group, fw)
stress = self_stress_basis(fw)[0]
svg = render_svg(fw, group, center, stress=stress, title="fig3 self-stress")
(out_dir / "fig3_stress.svg").write_text(svg)

# ... and its anti-symmetric mechanism, as velocity arrows.
motion = mechanism_basis(fw)[0]
svg = render_svg(fw, group, center, mechanism=motion, title="fig3 mechanism")
(out_dir / "fig3_mechanism.svg").write_text(svg)

# A pinned grid: pinned joints are drawn as squares.  Bars fixed by some
# symmetry operation are highlighted by default.
entry = generate("quadgrid")
fw = entry.framework
group, center = resolve_group(entry.group, fw)
stress = self_stress_basis(fw)[0]
svg = render_svg(fw, group, center, stress=stress, title="quadgrid stress")
(out_dir / "quadgrid_stress.svg").write_text(svg)

for name in ("fig3_stress.svg", "fig3_mechanism.svg", "quadgrid_stress.svg"):
    print("wrote", out_dir / name)

# The same pictures are available from the command line:
#   symstress render fig3.json --stress 0 -o fig3_stress.svg
