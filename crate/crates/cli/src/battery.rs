//! The built-in battery, as problem files compiled into the binary.

use crate::problem::ProblemFile;

const FILES: &[(&str, &str)] = &[
    (
        "A1",
        "ring x
         w = x^2
         mf P = koszul(x, x)
         verify P P",
    ),
    (
        "A2",
        "ring x
         w = x^3
         mf P = koszul(x, x^2)
         mf Q = koszul(x^2, x)
         endo a on P = [[0, 1], [-x, 0]]
         verify P P
         verify P Q
         cardy P P a a",
    ),
    (
        "A3",
        "ring x
         w = x^4
         mf P = koszul(x^2, x^2)
         mf Q = koszul(x, x^3)
         endo a on P = [[0, 1], [-1, 0]]
         endo b on Q = [[0, 1], [-x^2, 0]]
         verify P Q
         cardy P P a a
         cardy P Q a b",
    ),
    (
        "A4",
        "ring x
         w = x^5
         mf P = koszul(x^2, x^3)
         mf Q = koszul(x, x^4)
         verify P Q",
    ),
    (
        "A5",
        "ring x
         w = x^6
         mf P = koszul(x^3, x^3)
         mf Q = koszul(x^2, x^4)
         verify P Q",
    ),
    (
        "xy",
        "ring x, y
         w = x*y
         mf P = koszul(x, y)
         mf S = shift(P)
         mf C = koszul(1, x*y)
         mf PC = sum(P, C)
         endo a on P = scale(1 + x, id)
         endo b on P = id
         verify P P
         verify S P
         verify PC P
         cardy P P a b",
    ),
    (
        "fermat2",
        "ring x, y
         w = x^3 + y^3
         mf P = tensor(koszul(x, x^2), koszul(y, y^2))
         mf Q = tensor(koszul(x^2, x), koszul(y, y^2))
         mf PS = sum(P, shift(P))
         mf DD = dual(dual(P))
         endo a on P = scale(x, id)
         endo b on P = scale(y, id)
         verify P P
         verify P Q
         verify PS Q
         verify DD Q
         cardy P P a b",
    ),
    (
        "fermat3",
        "ring x, y, z
         w = x^3 + y^3 + z^3
         mf P = tensor(tensor(koszul(x, x^2), koszul(y, y^2)), koszul(z, z^2))
         verify P P",
    ),
    (
        "quartic2",
        "ring x, y
         w = x^4 + y^4
         mf Kx = koszul(x^2, x^2)
         mf Ky = koszul(y^2, y^2)
         mf P = tensor(Kx, Ky)
         endo ax on Kx = [[0, 1], [-1, 0]]
         endo ay on Ky = [[0, 1], [-1, 0]]
         endo t on P = tensor(ax, ay)
         verify P P
         cardy P P t t",
    ),
    (
        "knorrer2",
        "ring x, y
         w = x^2 + y^2
         mf Kx = koszul(x, x)
         mf Ky = koszul(y, y)
         mf P = tensor(Kx, Ky)
         mf C = koszul(1, x^2 + y^2)
         endo tx on Kx = [[0, 1], [-1, 0]]
         endo ty on Ky = [[0, 1], [-1, 0]]
         endo ix on Kx = id
         endo iy on Ky = id
         endo t1 on P = tensor(tx, iy)
         endo t2 on P = tensor(ix, ty)
         endo t12 on P = compose(t1, t2)
         verify P P
         verify C P
         cardy P P t12 t12",
    ),
    (
        "knorrer3",
        "ring x, y, z
         w = x^2 + y^2 + z^2
         mf Kx = koszul(x, x)
         mf Ky = koszul(y, y)
         mf Kz = koszul(z, z)
         mf Kxy = tensor(Kx, Ky)
         mf P = tensor(Kxy, Kz)
         endo tx on Kx = [[0, 1], [-1, 0]]
         endo ty on Ky = [[0, 1], [-1, 0]]
         endo tz on Kz = [[0, 1], [-1, 0]]
         endo txy on Kxy = tensor(tx, ty)
         endo t on P = tensor(txy, tz)
         verify P P
         cardy P P t t",
    ),
    (
        "knorrer-a2",
        "ring x, u, v
         w = x^3 + u*v
         mf P = tensor(koszul(x, x^2), koszul(u, v))
         mf Q = tensor(koszul(x^2, x), koszul(u, v))
         verify P P
         verify P Q",
    ),
    (
        "D4",
        "ring x, y
         w = x^3 + x*y^2
         mf D = explicit{d1 = [[x, y], [-x*y, x^2]],
                         d0 = [[x^2, -y], [x*y, x]]}
         mf K = koszul(x, x^2 + y^2)
         endo a on D = scale(x, id)
         endo b on K = scale(y, id)
         verify D D
         verify D K
         verify K K
         cardy D K a b",
    ),
];

/// All battery problems, parsed.
pub fn builtin_battery() -> Vec<ProblemFile> {
    FILES
        .iter()
        .map(|(name, text)| {
            ProblemFile::parse(name, text).unwrap_or_else(|e| panic!("battery file {name}: {e}"))
        })
        .collect()
}

/// Source text of a battery problem.
pub fn battery_source(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}
