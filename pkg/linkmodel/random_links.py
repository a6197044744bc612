import numpy as np

from models.surface_link import OUTER, LoopSpec, SurfaceLink
from models.weight import Weight


def random_link(
    rng: np.random.Generator,
    colors: list[Weight],
    max_loops: int = 5,
    max_genus: int = 3,
    max_winding: int = 4,
) -> SurfaceLink:
    """A random nesting forest; each new loop picks a parent among the earlier ones."""
    n = int(rng.integers(0, max_loops + 1))
    loops = []
    for i in range(n):
        choice = int(rng.integers(0, i + 1))
        parent = OUTER if choice == i else loops[choice].id
        loops.append(LoopSpec(
            id=f"l{i}",
            parent=parent,
            winding=int(rng.integers(-max_winding, max_winding + 1)),
            color=colors[int(rng.integers(0, len(colors)))],
            inner_is_plus=bool(rng.integers(0, 2)),
        ))

    faces = [OUTER] + [loop.id for loop in loops]
    genus_face = faces[int(rng.integers(0, len(faces)))]
    return SurfaceLink(
        genus=int(rng.integers(0, max_genus + 1)),
        loops=tuple(loops),
        genus_face=genus_face,
    )
