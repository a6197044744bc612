from dataclasses import replace

from models.surface_link import LoopSpec, SurfaceLink
from models.weight import Weight


def remove_loop(link: SurfaceLink, loop_id: str) -> SurfaceLink:
    """Delete a loop; its children move to its parent and its face merges into the parent face."""
    removed = link.loop(loop_id)
    loops = tuple(
        replace(loop, parent=removed.parent) if loop.parent == loop_id else loop
        for loop in link.loops
        if loop.id != loop_id
    )
    genus_face = removed.parent if link.genus_face == loop_id else link.genus_face
    return SurfaceLink(genus=link.genus, loops=loops, genus_face=genus_face)


def recolor_loop(link: SurfaceLink, loop_id: str, color: Weight) -> SurfaceLink:
    return _map_loop(link, loop_id, lambda loop: replace(loop, color=color))


def flip_loop(link: SurfaceLink, loop_id: str) -> SurfaceLink:
    """Swap the positive side of a loop and negate its winding."""
    return _map_loop(
        link, loop_id,
        lambda loop: replace(loop, inner_is_plus=not loop.inner_is_plus, winding=-loop.winding),
    )


def _map_loop(link: SurfaceLink, loop_id: str, change) -> SurfaceLink:
    link.loop(loop_id)
    loops = tuple(change(loop) if loop.id == loop_id else loop for loop in link.loops)
    return SurfaceLink(genus=link.genus, loops=loops, genus_face=link.genus_face)


def single_loop(genus: int, winding: int, color: Weight, inner_is_plus: bool = True) -> SurfaceLink:
    return SurfaceLink(genus=genus, loops=(LoopSpec("K", "outer", winding, color, inner_is_plus),))
