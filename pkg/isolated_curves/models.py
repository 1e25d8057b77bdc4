from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple


class CheckerError(ValueError):
    """Invalid input handed to the checker (bad form, bad class, bad config)."""


class LatticeError(CheckerError):
    """Invalid Gram form or divisor class."""


class AmplenessError(LatticeError):
    """A -2 class is orthogonal to H, so H cannot be the ample hyperplane class."""


class ConeError(CheckerError):
    """A cone operation was requested on a cone that does not support it."""


class ConfigError(CheckerError):
    """Malformed run configuration, embedding row or degree type."""


class _ValueEnum(str, Enum):
    """str Enum whose members round-trip through JSON as their value."""

    @classmethod
    def from_value(cls, value: str):
        try:
            return cls(value)
        except ValueError as exc:
            raise CheckerError(f"未知的 {cls.__name__} 取值: {value!r}") from exc


class Side(_ValueEnum):
    LEFT = "left"    # y > 0
    RIGHT = "right"  # y < 0


class RayTag(_ValueEnum):
    MINUS_TWO = "minus_two"
    ISOTROPIC = "isotropic"


class ConeKind(_ValueEnum):
    RATIONAL_RAYS = "rational_rays"
    IRRATIONAL_LIGHT_CONE = "irrational_light_cone"


class Effectivity(_ValueEnum):
    EFFECTIVE = "effective"
    NOT_EFFECTIVE = "not_effective"
    BOUNDARY_LIMIT = "boundary_limit"


class H1Verdict(_ValueEnum):
    VANISHES = "vanishes"
    NONVANISHING = "nonvanishing"
    UNKNOWN = "unknown"


class H1Reason(_ValueEnum):
    ZERO_CLASS = "zero_class"
    NEF_BIG_KV = "nef_big_kv"
    RR_MINUS4_BOTH_EMPTY = "rr_minus4_both_empty"
    EXTREMAL_RATIONAL_CURVE = "extremal_rational_curve"
    ELLIPTIC_PENCIL_MULTIPLE = "elliptic_pencil_multiple"
    RR_NEGATIVE_SQUARE = "rr_negative_square"
    NO_MINUS_TWO_LATTICE = "no_minus_two_lattice"
    OUTSIDE_RULES = "outside_rules"


class ExistenceCase(_ValueEnum):
    CASE_I = "case_i"
    CASE_II = "case_ii"
    CASE_III = "case_iii"
    CASE_IV = "case_iv"
    EXCLUDED_II_A = "excluded_ii_a"
    EXCLUDED_II_B = "excluded_ii_b"
    EXCLUDED_II_C = "excluded_ii_c"
    EXCLUDED_II_D = "excluded_ii_d"
    EXCLUDED_IV_PAIR = "excluded_iv_pair"
    EXCLUDED_NONE_FIT = "excluded_none_fit"


class PicardType(_ValueEnum):
    RANK1_CASE_I = "rank1_case_i"
    RANK2_HC = "rank2_HC"
    NOT_APPLICABLE = "not_applicable"


class CheckStatus(_ValueEnum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"


class Route(_ValueEnum):
    """Which vanishing argument a report used for h^1(X, D)."""

    NO_MINUS_TWO = "no_minus_two"
    CONE = "cone"
    RATIONAL = "rational"


# ---------------------------------------------------------------------------
# lattice values
# ---------------------------------------------------------------------------


def require_int(name: str, value: Any, error=LatticeError) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise error(f"{name} 必须是整数, 实际为 {value!r}")
    return value


@dataclass(frozen=True)
class GramForm:
    """Intersection form h x^2 + 2d xy + c y^2 of Pic X = ZH + ZC.

    h = H^2, d = H.C, c = C^2 = 2g - 2.
    """

    h: int
    d: int
    c: int

    def __post_init__(self) -> None:
        for name in ("h", "d", "c"):
            require_int(name, getattr(self, name))
        if self.h <= 0 or self.d <= 0:
            raise LatticeError(f"需要 h > 0 且 d > 0, 实际 h={self.h}, d={self.d}")
        if self.disc <= 0:
            raise LatticeError(
                f"判别式 d^2 - hc = {self.disc} 不是正数, 不是双曲格 (h={self.h}, d={self.d}, c={self.c})"
            )

    @classmethod
    def for_curve(cls, h: int, d: int, g: int) -> "GramForm":
        return cls(h, d, 2 * g - 2)

    @property
    def disc(self) -> int:
        return self.d * self.d - self.h * self.c

    @property
    def half_degree(self) -> int:
        if self.h % 2:
            raise LatticeError(f"h={self.h} 是奇数, 没有半次数")
        return self.h // 2

    def to_dict(self) -> Dict[str, int]:
        return {"h": self.h, "d": self.d, "c": self.c}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GramForm":
        return cls(int(data["h"]), int(data["d"]), int(data["c"]))


@dataclass(frozen=True)
class DivClass:
    """Integral divisor class x H + y C."""

    x: int
    y: int

    def __post_init__(self) -> None:
        require_int("x", self.x)
        require_int("y", self.y)

    def __neg__(self) -> "DivClass":
        return DivClass(-self.x, -self.y)

    def __add__(self, other: "DivClass") -> "DivClass":
        return DivClass(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "DivClass") -> "DivClass":
        return DivClass(self.x - other.x, self.y - other.y)

    def scaled(self, factor: int) -> "DivClass":
        return DivClass(self.x * factor, self.y * factor)

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def as_tuple(self) -> Tuple[int, int]:
        return (self.x, self.y)

    def to_list(self) -> List[int]:
        return [self.x, self.y]

    @classmethod
    def from_value(cls, value: Sequence[int]) -> "DivClass":
        if len(value) != 2:
            raise LatticeError(f"除子类需要两个坐标, 实际为 {value!r}")
        return cls(int(value[0]), int(value[1]))


@dataclass(frozen=True)
class SolutionSet:
    """Representations of ``target`` by the form.

    ``solutions`` is the raw enumeration with |x| <= exhaustive_bound sorted by
    ray angle; ``representatives`` holds one effective class per orbit of the
    form's automorphism group (or every solution when the orbits are finite).
    """

    target: int
    solutions: Tuple[DivClass, ...]
    exhaustive_bound: int
    representatives: Tuple[DivClass, ...] = ()


# ---------------------------------------------------------------------------
# cones and certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalRay:
    divisor: DivClass
    tag: RayTag

    def to_dict(self) -> Dict[str, Any]:
        return {"class": self.divisor.to_list(), "tag": self.tag.value}

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> Optional["ExtremalRay"]:
        if not data:
            return None
        return cls(DivClass.from_value(data["class"]), RayTag.from_value(data["tag"]))


@dataclass(frozen=True)
class ConeDesc:
    """Closed effective cone of a rank-2 K3 lattice and its dual nef cone."""

    form: GramForm
    kind: ConeKind
    ray_left: Optional[ExtremalRay] = None
    ray_right: Optional[ExtremalRay] = None
    nef_left: Optional[DivClass] = None
    nef_right: Optional[DivClass] = None

    def __post_init__(self) -> None:
        parts = (self.ray_left, self.ray_right, self.nef_left, self.nef_right)
        if self.kind is ConeKind.RATIONAL_RAYS and any(p is None for p in parts):
            raise ConeError("有理锥必须给出两条极射线和两个 nef 生成元")
        if self.kind is ConeKind.IRRATIONAL_LIGHT_CONE and any(p is not None for p in parts):
            raise ConeError("无理光锥没有整生成元")

    @property
    def is_rational(self) -> bool:
        return self.kind is ConeKind.RATIONAL_RAYS

    @property
    def rays(self) -> Tuple[ExtremalRay, ...]:
        if not self.is_rational:
            return ()
        return (self.ray_left, self.ray_right)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "form": self.form.to_dict(),
            "kind": self.kind.value,
            "ray_left": self.ray_left.to_dict() if self.ray_left else None,
            "ray_right": self.ray_right.to_dict() if self.ray_right else None,
            "nef_left": self.nef_left.to_list() if self.nef_left else None,
            "nef_right": self.nef_right.to_list() if self.nef_right else None,
        }

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> Optional["ConeDesc"]:
        if not data:
            return None
        return cls(
            form=GramForm.from_dict(data["form"]),
            kind=ConeKind.from_value(data["kind"]),
            ray_left=ExtremalRay.from_dict(data.get("ray_left")),
            ray_right=ExtremalRay.from_dict(data.get("ray_right")),
            nef_left=DivClass.from_value(data["nef_left"]) if data.get("nef_left") else None,
            nef_right=DivClass.from_value(data["nef_right"]) if data.get("nef_right") else None,
        )


@dataclass(frozen=True)
class H1Certificate:
    """Tri-state verdict on h^1(X, O_X(D)) with the rule that decided it."""

    verdict: H1Verdict
    reason: H1Reason
    h1_value: Optional[int] = None
    detail: str = ""

    def __post_init__(self) -> None:
        if self.h1_value is not None and self.h1_value < 0:
            raise CheckerError(f"h1 不能为负: {self.h1_value}")
        if self.verdict is H1Verdict.VANISHES and self.h1_value not in (None, 0):
            raise CheckerError("vanishes 证书的 h1 必须为 0")
        if self.reason is H1Reason.ELLIPTIC_PENCIL_MULTIPLE and self.verdict is not H1Verdict.NONVANISHING:
            raise CheckerError("椭圆束倍数必然不消失")
        if self.reason is H1Reason.RR_NEGATIVE_SQUARE and self.verdict is not H1Verdict.NONVANISHING:
            raise CheckerError("D^2 < -4 且 h0 = h2 = 0 时 h1 必然不消失")

    @property
    def vanishes(self) -> bool:
        return self.verdict is H1Verdict.VANISHES

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "reason": self.reason.value,
            "h1_value": self.h1_value,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> Optional["H1Certificate"]:
        if not data:
            return None
        return cls(
            verdict=H1Verdict.from_value(data["verdict"]),
            reason=H1Reason.from_value(data["reason"]),
            h1_value=data.get("h1_value"),
            detail=data.get("detail", ""),
        )


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool
    case: ExistenceCase
    picard: PicardType
    detail: str = ""

    def __post_init__(self) -> None:
        rank_two_cases = (ExistenceCase.CASE_II, ExistenceCase.CASE_III, ExistenceCase.CASE_IV)
        if self.exists and self.case in rank_two_cases and self.picard is not PicardType.RANK2_HC:
            raise CheckerError(f"{self.case.value} 必须给出 Pic X = ZH + ZC")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "exists": self.exists,
            "case": self.case.value,
            "picard": self.picard.value,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> Optional["ExistenceVerdict"]:
        if not data:
            return None
        return cls(
            exists=bool(data["exists"]),
            case=ExistenceCase.from_value(data["case"]),
            picard=PicardType.from_value(data["picard"]),
            detail=data.get("detail", ""),
        )


# ---------------------------------------------------------------------------
# embedding rows
# ---------------------------------------------------------------------------

_DEGREE_SPLIT = re.compile(r"[\s,]+")


def parse_degree_type(text: Any) -> Tuple[int, ...]:
    """Parse "5", "(2,4)", "2,2,3" or a list of ints into a degree tuple (order kept)."""
    if isinstance(text, (list, tuple)):
        values = [require_int("degree", v, ConfigError) for v in text]
    else:
        body = str(text).strip().strip("()[]").strip()
        if not body:
            raise ConfigError(f"空的次数类型: {text!r}")
        try:
            values = [int(part) for part in _DEGREE_SPLIT.split(body) if part]
        except ValueError as exc:
            raise ConfigError(f"无法解析次数类型: {text!r}") from exc
    if not values or any(v <= 0 for v in values):
        raise ConfigError(f"次数必须是正整数: {text!r}")
    return tuple(values)


def normalize_degrees(degrees: Iterable[int]) -> Tuple[int, ...]:
    """Sorted (ascending) form of a CICY type, so (4,2) and (2,4) coincide."""
    return tuple(sorted(degrees))


def merged_y_type(x_degrees: Sequence[int]) -> Tuple[int, ...]:
    """(a_1, ..., a_{r-4}, a_{r-3} + a_{r-2}), normalized."""
    return normalize_degrees(tuple(x_degrees[:-2]) + (x_degrees[-2] + x_degrees[-1],))


@dataclass(frozen=True)
class EmbeddingRow:
    """A row of the embedding table: K3 type X inside the CICY type Y.

    The X degrees keep their table order because the last two entries are the
    pair whose sum becomes Y's merged degree; Y is stored sorted.
    """

    x_degrees: Tuple[int, ...]
    y_degrees: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        x_degrees = parse_degree_type(self.x_degrees)
        if len(x_degrees) < 2:
            raise ConfigError(f"X 类型至少需要两个次数: {x_degrees}")
        expected = merged_y_type(x_degrees)
        y_degrees = normalize_degrees(parse_degree_type(self.y_degrees)) if self.y_degrees else expected
        if y_degrees != expected:
            raise ConfigError(f"Y 类型 {y_degrees} 与 X 类型 {x_degrees} 不匹配 (应为 {expected})")
        object.__setattr__(self, "x_degrees", x_degrees)
        object.__setattr__(self, "y_degrees", y_degrees)
        if self.h % 2:
            raise ConfigError(f"X 类型 {x_degrees} 的次数 h={self.h} 为奇数, 不是 K3 行")

    @property
    def r(self) -> int:
        return len(self.x_degrees) + 2

    @property
    def h(self) -> int:
        return math.prod(self.x_degrees)

    @property
    def n_k3(self) -> int:
        return self.h // 2

    @property
    def a_r3(self) -> int:
        return self.x_degrees[-2]

    @property
    def a_r2(self) -> int:
        return self.x_degrees[-1]

    @property
    def a(self) -> int:
        return min(self.a_r3, self.a_r2)

    @property
    def b(self) -> int:
        return max(self.a_r3, self.a_r2)

    @property
    def l(self) -> int:  # noqa: E743
        return math.prod(self.x_degrees[:-2]) * self.a_r3 ** 2 * self.a_r2 ** 2

    @property
    def mu(self) -> int:
        return self.h // 2 + 1

    @property
    def label(self) -> str:
        return f"Y={format_degrees(self.y_degrees)} X={format_degrees(self.x_degrees)}"

    def to_dict(self) -> Dict[str, Any]:
        return {"y_type": list(self.y_degrees), "x_type": list(self.x_degrees)}


def format_degrees(degrees: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in degrees) + ")"


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: CheckStatus
    detail: str = ""
    gating: bool = True

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status.value,
            "detail": self.detail,
            "gating": self.gating,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckResult":
        return cls(
            name=data["name"],
            status=CheckStatus.from_value(data["status"]),
            detail=data.get("detail", ""),
            gating=bool(data.get("gating", True)),
        )


@dataclass(frozen=True)
class Quantities:
    """Derived numbers of one case.

    nodes = l (node count), n_l = h^0(X, L), dim_a0 = N = dim|O_A(b)| on the
    node curve A in |aH|, D = (a+b)H - C with its square (K3 rows only).
    """

    nodes: int
    n_l: int
    dim_a0: int
    a: int
    b: int
    h: Optional[int] = None
    mu: Optional[int] = None
    divisor: Optional[DivClass] = None
    divisor_sq: Optional[int] = None
    genus_a: Optional[int] = None
    degree_a: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "l": self.nodes,
            "n_L": self.n_l,
            "N": self.dim_a0,
            "a": self.a,
            "b": self.b,
            "h": self.h,
            "mu": self.mu,
            "D": self.divisor.to_list() if self.divisor else None,
            "D_sq": self.divisor_sq,
            "genus_A": self.genus_a,
            "degree_A": self.degree_a,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Quantities":
        return cls(
            nodes=data["l"],
            n_l=data["n_L"],
            dim_a0=data["N"],
            a=data["a"],
            b=data["b"],
            h=data.get("h"),
            mu=data.get("mu"),
            divisor=DivClass.from_value(data["D"]) if data.get("D") else None,
            divisor_sq=data.get("D_sq"),
            genus_a=data.get("genus_A"),
            degree_a=data.get("degree_A"),
        )


@dataclass
class CriterionReport:
    """Every numeric condition of the existence argument for one case."""

    subject: str
    y_type: Tuple[int, ...]
    x_type: Tuple[int, ...]
    g: int
    d: int
    quantities: Quantities
    checks: List[CheckResult] = field(default_factory=list)
    route: Optional[Route] = None
    h1: Optional[H1Certificate] = None
    cone: Optional[ConeDesc] = None
    existence: Optional[ExistenceVerdict] = None

    @property
    def gating_checks(self) -> List[CheckResult]:
        return [check for check in self.checks if check.gating]

    @property
    def first_failing_check(self) -> Optional[str]:
        for check in self.gating_checks:
            if not check.passed:
                return check.name
        return None

    @property
    def satisfied(self) -> bool:
        return self.first_failing_check is None

    @property
    def verdict(self) -> str:
        return "criterion_satisfied" if self.satisfied else "failed"

    def check(self, name: str) -> CheckResult:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "y_type": list(self.y_type),
            "x_type": list(self.x_type),
            "g": self.g,
            "d": self.d,
            "quantities": self.quantities.to_dict(),
            "checks": [check.to_dict() for check in self.checks],
            "route": self.route.value if self.route else None,
            "h1": self.h1.to_dict() if self.h1 else None,
            "cone": self.cone.to_dict() if self.cone else None,
            "existence": self.existence.to_dict() if self.existence else None,
            "verdict": self.verdict,
            "first_failing_check": self.first_failing_check,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CriterionReport":
        return cls(
            subject=data["subject"],
            y_type=tuple(data["y_type"]),
            x_type=tuple(data["x_type"]),
            g=data["g"],
            d=data["d"],
            quantities=Quantities.from_dict(data["quantities"]),
            checks=[CheckResult.from_dict(item) for item in data.get("checks", [])],
            route=Route.from_value(data["route"]) if data.get("route") else None,
            h1=H1Certificate.from_dict(data.get("h1")),
            cone=ConeDesc.from_dict(data.get("cone")),
            existence=ExistenceVerdict.from_dict(data.get("existence")),
        )
