from dataclasses import dataclass, field

from core.errors import InvalidLink
from models.weight import Weight

OUTER = "outer"


@dataclass(frozen=True)
class LoopSpec:
    """
    One simple closed loop of a double-point-free link diagram.

    parent is the loop directly enclosing this one (or OUTER). winding is
    the winding number of the loop's S^1 component. inner_is_plus says
    whether the region inside the loop is the positive side.
    """

    id: str
    parent: str
    winding: int
    color: Weight
    inner_is_plus: bool = True

    def __post_init__(self):
        if not self.id or self.id == OUTER:
            raise InvalidLink(f"Invalid loop id: {self.id!r}")
        if not isinstance(self.winding, int) or isinstance(self.winding, bool):
            raise InvalidLink(f"Invalid winding for loop {self.id}: {self.winding!r}")


@dataclass(frozen=True)
class SurfaceLink:
    """Genus plus a nesting forest of loops on the surface."""

    genus: int
    loops: tuple[LoopSpec, ...] = ()
    genus_face: str = OUTER

    def __post_init__(self):
        object.__setattr__(self, "loops", tuple(self.loops))

        if not isinstance(self.genus, int) or self.genus < 0:
            raise InvalidLink(f"Invalid genus: {self.genus!r}")

        ids = [loop.id for loop in self.loops]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise InvalidLink(f"Duplicate loop ids: {dupes}")

        known = set(ids)
        for loop in self.loops:
            if loop.parent != OUTER and loop.parent not in known:
                raise InvalidLink(f"Loop {loop.id} has dangling parent {loop.parent!r}")

        if self.genus_face != OUTER and self.genus_face not in known:
            raise InvalidLink(f"Unknown genus_face {self.genus_face!r}")

        # every parent chain must reach OUTER
        parents = {loop.id: loop.parent for loop in self.loops}
        for start in ids:
            seen = {start}
            current = parents[start]
            while current != OUTER:
                if current in seen:
                    raise InvalidLink(f"Nesting cycle through loop {start}")
                seen.add(current)
                current = parents[current]

    def loop(self, loop_id: str) -> LoopSpec:
        for loop in self.loops:
            if loop.id == loop_id:
                return loop
        raise InvalidLink(f"Unknown loop id: {loop_id!r}")

    def children(self, face_id: str) -> list[LoopSpec]:
        return [loop for loop in self.loops if loop.parent == face_id]


@dataclass(frozen=True)
class Face:
    id: str
    chi: int
    gleam: int
    adjacent: tuple[str, ...]


@dataclass(frozen=True)
class FaceData:
    """
    Faces of the diagram: OUTER first, then one face per loop (the region
    between the loop and its children) in loop order.
    """

    faces: tuple[Face, ...]
    plus_face: dict[str, str] = field(default_factory=dict)
    minus_face: dict[str, str] = field(default_factory=dict)

    def face(self, face_id: str) -> Face:
        for f in self.faces:
            if f.id == face_id:
                return f
        raise KeyError(face_id)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(f.id for f in self.faces)
