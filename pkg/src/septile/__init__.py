"""septile: separating polygonal tilings for disc packings.

Subpackages by geometry and task:

- ``euclidean``, ``spherical``, ``hyperbolic``: kernels (discs, potentials,
  pairwise bisectors, model conversions).
- ``tiling``: diagram construction, verification, cell areas.
- ``caps``: tangent caps of convex polygon discs, isosceles searches.
- ``nonseparable``: construction and certification of packings of a
  non-circular disc that no polygonal tiling separates.
- ``packio``: JSON packing/tiling documents and random generators.
- ``svgrender``: SVG figures for all three geometries.
- ``cli``: command-line interface.
"""

from . import euclidean, spherical, hyperbolic, tiling, caps, nonseparable, packio, svgrender

__version__ = "0.1.0"

__all__ = [
    "euclidean",
    "spherical",
    "hyperbolic",
    "tiling",
    "caps",
    "nonseparable",
    "packio",
    "svgrender",
    "__version__",
]
