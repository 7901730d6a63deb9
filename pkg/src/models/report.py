"""Classification report and witness models."""

from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.common import Property, Verdict


class WitnessKind(StrEnum):
    DISCONNECTED_LINK_FACE = "DisconnectedLinkFace"
    IMPURE_FACET_PAIR = "ImpureFacetPair"
    NONVANISHING_LINK_HOMOLOGY = "NonvanishingLinkHomology"
    SHELLING_ORDER = "ShellingOrder"
    NO_SHELLING_EXISTS = "NoShellingExists"


class Witness(BaseModel):
    """Certificate for a decided property, re-checkable against the complex alone."""

    model_config = ConfigDict(frozen=True)

    kind: WitnessKind
    property: str = Field(..., description="Report field the witness supports, e.g. 'cohen_macaulay[2]'")
    face: list[int] | None = Field(default=None, description="Face whose link carries the obstruction")
    facets: list[list[int]] | None = Field(default=None, description="Facet pair or shelling order")
    dimension: int | None = Field(default=None, description="Homological dimension i")
    characteristic: int | None = Field(default=None, description="Field characteristic of the Betti number")
    nodes: int | None = Field(default=None, description="Search nodes spent proving non-shellability")

    @model_validator(mode="after")
    def check_payload(self) -> "Witness":
        required = {
            WitnessKind.DISCONNECTED_LINK_FACE: ("face",),
            WitnessKind.IMPURE_FACET_PAIR: ("facets",),
            WitnessKind.NONVANISHING_LINK_HOMOLOGY: ("face", "dimension", "characteristic"),
            WitnessKind.SHELLING_ORDER: ("facets",),
            WitnessKind.NO_SHELLING_EXISTS: (),
        }[self.kind]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.kind.value} witness is missing {missing}")
        if self.kind is WitnessKind.IMPURE_FACET_PAIR and len(self.facets or []) != 2:
            raise ValueError("ImpureFacetPair needs exactly two facets")
        return self

    def summary(self) -> str:
        if self.kind is WitnessKind.DISCONNECTED_LINK_FACE:
            return f"link of {self.face} is disconnected"
        if self.kind is WitnessKind.IMPURE_FACET_PAIR:
            return f"facets {self.facets[0]} and {self.facets[1]} differ in size"
        if self.kind is WitnessKind.NONVANISHING_LINK_HOMOLOGY:
            return f"H~_{self.dimension}(link {self.face}) != 0 in characteristic {self.characteristic}"
        if self.kind is WitnessKind.SHELLING_ORDER:
            return f"shelling order of {len(self.facets)} facets"
        return f"exhaustive search ({self.nodes} nodes) found no shelling"


class ClassificationReport(BaseModel):
    """Properties of one complex; fields left as None were not requested."""

    subject: str = Field(..., description="Graph or complex identifier")
    graph: dict[str, Any] | None = Field(default=None, description="Graph serialization when the subject is a graph")
    dimension: int | None = None
    n_facets: int | None = None
    pure: bool | None = None
    well_covered: bool | None = None
    s2: bool | None = None
    s2_terai: dict[int, bool] | None = Field(default=None, description="Terai r=2 decider per characteristic")
    sr: dict[int, bool] | None = Field(default=None, description="S_r over characteristic 0 per requested r")
    cohen_macaulay: dict[int, bool] | None = None
    cohen_macaulay_all_fields: bool | None = None
    buchsbaum: dict[int, bool] | None = None
    buchsbaum_all_fields: bool | None = None
    shellable: Verdict | None = None
    vertex_decomposable: Verdict | None = None
    strongly_connected: bool | None = Field(default=None, description="Unset for impure complexes, where it is undefined")
    inferred: list[str] = Field(default_factory=list, description="Properties settled by the hierarchy without a search")
    witnesses: list[Witness] = Field(default_factory=list)

    def has(self, prop: Property) -> bool:
        return getattr(self, prop.value) is not None

    def missing(self, props: list[Property] | tuple[Property, ...]) -> list[Property]:
        return [p for p in props if not self.has(p)]

    def merged(self, other: "ClassificationReport") -> "ClassificationReport":
        """Fill this report's unset properties from ``other`` (witnesses concatenated, deduplicated)."""
        data = self.model_dump()
        for name, value in other.model_dump().items():
            if name in ("witnesses", "inferred"):
                continue
            if data.get(name) is None and value is not None:
                data[name] = value
        witnesses = list(self.witnesses)
        for w in other.witnesses:
            if w not in witnesses:
                witnesses.append(w)
        data["witnesses"] = witnesses
        data["inferred"] = sorted(set(self.inferred) | set(other.inferred))
        return ClassificationReport(**data)


class WitnessFile(BaseModel):
    """Standalone witness file: the witness and the complex it refers to."""

    subject: str
    graph: dict[str, Any] | None = Field(default=None, description="Circulant spec {'n', 'gens'} when the subject is a graph")
    complex: dict[str, Any] = Field(..., description="SimplicialComplex.to_dict() of the complex the witness is about")
    witness: Witness
