"""
Tensor and result file formats
JSON documents with explicit [re, im] pairs; floats are written with their
shortest round-trip repr so a read after a write restores every bit.
"""

import json
from pathlib import Path
from typing import List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.solvers.results import EigenPair, SolveReport
from src.tensors.dense import DenseTensor
from src.tensors.monomials import MonomialForm, from_monomials
from src.utils.errors import InputError

Pair = Tuple[float, float]


def to_pair(value: complex) -> Pair:
    value = complex(value)
    return (float(value.real), float(value.imag))


def from_pair(pair: Sequence[float]) -> complex:
    return complex(pair[0], pair[1])


class MonomialTerm(BaseModel):
    coeff: Pair
    alpha: List[int]


class TensorFile(BaseModel):
    """A tensor as dense row-major entries or as a list of monomials"""

    model_config = ConfigDict(extra="forbid")

    order: int = Field(ge=2)
    dim: int = Field(ge=1)
    format: Literal["dense", "monomials"]
    entries: List[Union[MonomialTerm, Pair]]

    @model_validator(mode="after")
    def check_entries(self) -> "TensorFile":
        if self.format == "dense":
            if any(isinstance(e, MonomialTerm) for e in self.entries):
                raise ValueError("dense entries must be [re, im] pairs")
            if len(self.entries) != self.dim ** self.order:
                raise ValueError(f"expected {self.dim ** self.order} dense entries, got {len(self.entries)}")
        else:
            for term in self.entries:
                if not isinstance(term, MonomialTerm):
                    raise ValueError("monomial entries must be {coeff, alpha} objects")
                if len(term.alpha) != self.dim or sum(term.alpha) != self.order or min(term.alpha) < 0:
                    raise ValueError(f"exponent {term.alpha} does not fit order {self.order}, dim {self.dim}")
        return self

    @classmethod
    def from_tensor(cls, A: DenseTensor) -> "TensorFile":
        return cls(order=A.order, dim=A.dim, format="dense", entries=[to_pair(v) for v in A.flat()])

    @classmethod
    def from_form(cls, form: MonomialForm) -> "TensorFile":
        terms = [MonomialTerm(coeff=to_pair(c), alpha=list(a)) for c, a in form.terms]
        return cls(order=form.degree, dim=form.dim, format="monomials", entries=terms)

    def to_tensor(self) -> DenseTensor:
        if self.format == "dense":
            return DenseTensor.from_flat(self.order, self.dim, [from_pair(e) for e in self.entries])
        form = MonomialForm.from_terms(
            self.order, self.dim, [(from_pair(t.coeff), t.alpha) for t in self.entries]
        )
        return from_monomials(form)


class EigenPairRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lambda_: Pair = Field(alias="lambda")
    x: List[Pair]
    multiplicity: int
    residual: float
    classification: str
    is_real: bool
    component_id: Optional[int] = None
    normalized: bool = True

    @classmethod
    def from_pair(cls, pair: EigenPair) -> "EigenPairRecord":
        return cls(
            lambda_=to_pair(pair.lam),
            x=[to_pair(v) for v in pair.x],
            multiplicity=pair.multiplicity,
            residual=pair.residual,
            classification=pair.classification.value,
            is_real=pair.is_real,
            component_id=pair.component_id,
            normalized=pair.normalized,
        )


class ResultMetadata(BaseModel):
    command: str
    m: int
    mprime: int
    n: int
    k: int
    seed: int
    path_count: int
    optimal_count: int
    paths_converged: int
    paths_at_infinity: int
    paths_failed: int
    retraced: int


class ResultFile(BaseModel):
    """Solve output: bookkeeping, the reported pairs and optionally the complex classes"""

    model_config = ConfigDict(populate_by_name=True)

    metadata: ResultMetadata
    eigenpairs: List[EigenPairRecord]
    complex_pairs: Optional[List[EigenPairRecord]] = None
    warnings: List[str] = Field(default_factory=list)

    @classmethod
    def from_report(
        cls,
        command: str,
        report: SolveReport,
        pairs: Optional[Sequence[EigenPair]] = None,
        include_complex: bool = False,
    ) -> "ResultFile":
        metadata = ResultMetadata(
            command=command,
            m=report.m,
            mprime=report.mprime,
            n=report.n,
            k=report.k,
            seed=report.seed,
            path_count=report.path_count,
            optimal_count=report.optimal_count,
            paths_converged=report.paths_converged,
            paths_at_infinity=report.paths_at_infinity,
            paths_failed=report.paths_failed,
            retraced=report.retraced,
        )
        reported = report.pairs if pairs is None else pairs
        return cls(
            metadata=metadata,
            eigenpairs=[EigenPairRecord.from_pair(p) for p in reported],
            complex_pairs=[EigenPairRecord.from_pair(p) for p in report.pairs] if include_complex else None,
            warnings=list(report.warnings),
        )

    def eigenvalues(self) -> List[complex]:
        return [from_pair(p.lambda_) for p in self.eigenpairs]


def _load(path: Union[str, Path]) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"Cannot read {path}: {e}") from e


def read_tensor_file(path: Union[str, Path]) -> DenseTensor:
    """Parse a tensor file; every format problem becomes InputError"""
    try:
        return TensorFile.model_validate(_load(path)).to_tensor()
    except ValidationError as e:
        raise InputError(f"Invalid tensor file {path}: {e}") from e


def read_result_file(path: Union[str, Path]) -> ResultFile:
    try:
        return ResultFile.model_validate(_load(path))
    except ValidationError as e:
        raise InputError(f"Invalid result file {path}: {e}") from e


def dump_model(model: BaseModel) -> str:
    return model.model_dump_json(by_alias=True, exclude_none=True, indent=2)


def write_model(model: BaseModel, path: Optional[Union[str, Path]] = None) -> str:
    """Write to path, or just return the JSON text when path is None"""
    text = dump_model(model)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text
