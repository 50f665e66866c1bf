"""Point lists as OBJ meshes (one unit cube per voxel) and CSV."""
import csv
import io
import itertools


# corners of the unit cube around a voxel, in doubled coordinates relative to 2p
CORNERS = list(itertools.product((-1, 1), repeat=3))
FACES = [
    (0, 1, 3, 2), (4, 6, 7, 5),
    (0, 4, 5, 1), (2, 3, 7, 6),
    (0, 2, 6, 4), (1, 5, 7, 3),
]


def _coordinate(doubled):
    return '{:g}'.format(doubled / 2)


def to_obj(image):
    if image.dimension != 3:
        raise ValueError('OBJ export needs points in Z^3')

    vertices = {}
    faces = []
    for p in image.sorted_points:
        ids = []
        for corner in CORNERS:
            key = tuple(2 * c + d for c, d in zip(p, corner))
            if key not in vertices:
                vertices[key] = len(vertices) + 1
            ids.append(vertices[key])
        for face in FACES:
            faces.append([ids[i] for i in face])

    out = ['# {} voxels'.format(len(image))]
    for key in vertices:
        out.append('v {}'.format(' '.join(_coordinate(c) for c in key)))
    for face in faces:
        out.append('f {}'.format(' '.join(str(i) for i in face)))
    return '\n'.join(out) + '\n'


def to_csv(image):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(['x{}'.format(i) for i in range(image.dimension)] + ['label'])
    for p in image.sorted_points:
        writer.writerow(list(p) + [image.label(p) or ''])
    return buf.getvalue()
