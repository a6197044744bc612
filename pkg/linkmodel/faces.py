from models.surface_link import OUTER, Face, FaceData, SurfaceLink

"""
Face data of a double-point-free link diagram.

    chi(Y)   = 2 - #(loops bounding Y), minus 2g on the genus face
    gleam(Y) = sum over bounding loops l of winding(l) * sgn(Y; l)

sgn(Y; l) is +1 when Y lies on the positive side of l.
"""


def side_sign(link: SurfaceLink, face_id: str, loop_id: str) -> int:
    loop = link.loop(loop_id)
    inside = face_id == loop.id
    if not inside and face_id != loop.parent:
        raise ValueError(f"Invalid face {face_id}: not adjacent to loop {loop_id}")
    positive_inside = 1 if loop.inner_is_plus else -1
    return positive_inside if inside else -positive_inside


def faces(link: SurfaceLink) -> FaceData:
    face_ids = [OUTER] + [loop.id for loop in link.loops]

    result = []
    for face_id in face_ids:
        adjacent = ([face_id] if face_id != OUTER else []) + [c.id for c in link.children(face_id)]

        chi = 2 - len(adjacent)
        if face_id == link.genus_face:
            chi -= 2 * link.genus

        gleam = sum(link.loop(l).winding * side_sign(link, face_id, l) for l in adjacent)
        result.append(Face(face_id, chi, gleam, tuple(adjacent)))

    plus_face = {}
    minus_face = {}
    for loop in link.loops:
        inner, outer = loop.id, loop.parent
        plus_face[loop.id], minus_face[loop.id] = (inner, outer) if loop.inner_is_plus else (outer, inner)

    return FaceData(tuple(result), plus_face, minus_face)


def euler_characteristic(data: FaceData) -> int:
    return sum(f.chi for f in data.faces)


def total_gleam(data: FaceData) -> int:
    return sum(f.gleam for f in data.faces)
