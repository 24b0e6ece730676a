"""Report types shared across hergkit modules."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

Status = Literal["PASS", "FAIL", "SKIP"]
EdgeClass = Literal["internal", "semi-internal", "external", "loop"]


class Violation(BaseModel):
    """One broken structural rule of a Herg."""

    model_config = ConfigDict(frozen=True)

    kind: str
    message: str
    subjects: list[str] = Field(default_factory=list)


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    violations: list[Violation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class Orbit(BaseModel):
    """A boundary component as a cyclic run of sides.

    Sides are written ``dart.L`` / ``dart.R``; ``crossings`` lists the
    half-ribbons whose external segment the orbit runs along, and
    ``crossing_at`` holds the index in ``sides`` where each crossing starts.
    """

    model_config = ConfigDict(frozen=True)

    sides: list[str]
    crossings: list[str] = Field(default_factory=list)
    crossing_at: list[int] = Field(default_factory=list)

    @property
    def closed(self) -> bool:
        return not self.crossings


class FaceReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    orbits: list[Orbit]
    bare: int = 0
    f_int: int
    f_ext: int
    c_ext: int


class EulerData(BaseModel):
    model_config = ConfigDict(frozen=True)

    chi: int
    gamma: int
    orientable_genus: int | None = None


class EmbeddingSignature(BaseModel):
    """Minimal punctured-surface data realizing a Herg."""

    model_config = ConfigDict(frozen=True)

    orientable: bool
    genus: int
    punctures_proper: int
    punctures_hproper: int
    chi: int

    @property
    def puncture_range(self) -> tuple[int, int]:
        return self.punctures_proper, self.punctures_hproper


class Classification(BaseModel):
    model_config = ConfigDict(frozen=True)

    hr_internal: list[str]
    hr_external: list[str]
    edge_classes: dict[str, EdgeClass]
    bridges: list[str]
    loops: list[str]
    vertex_classes: dict[str, Literal["internal", "external"]]
    v_int: int
    v_ext: int


class SubgraphStats(BaseModel):
    """(r, n, k, f_int, C_ext, o, |H|) of one spanning (cutting) subgraph."""

    model_config = ConfigDict(frozen=True)

    r: int
    n: int
    k: int
    f_int: int
    c_ext: int
    o: Literal[0, 1]
    hcount: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int, int]:
        return (self.r, self.n, self.k, self.f_int, self.c_ext, self.o, self.hcount)


class SubgraphSelector(BaseModel):
    model_config = ConfigDict(frozen=True)

    kept: frozenset[str]
    mode: Literal["delete", "cut"]


class DualWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    face_to_vertex: dict[int, str]
    edge_to_edge: dict[str, str]
    hr_to_hr: dict[str, str]


class IdentityResult(BaseModel):
    suite: str
    name: str
    status: Status
    detail: str = ""


class VerifyReport(BaseModel):
    graph: str = ""
    results: list[IdentityResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "FAIL" for r in self.results)

    def failures(self) -> list[IdentityResult]:
        return [r for r in self.results if r.status == "FAIL"]


class CorrespondenceReport(BaseModel):
    """Count equalities between a Herg and its dual."""

    results: list[IdentityResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "FAIL" for r in self.results)

    def failures(self) -> list[IdentityResult]:
        return [r for r in self.results if r.status == "FAIL"]
