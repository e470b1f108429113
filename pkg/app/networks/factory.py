"""
factory.py

Model names as used on the command line and in CSV rows:

    qhnn-hebbian, qhnn-projection
    qrcnn-{identity,high-order,potential,exponential}
    qrpnn-{identity,high-order,potential,exponential}
"""

from dataclasses import dataclass
from typing import Mapping

from app.kernels import KERNEL_NAMES, BaseKernel, make_kernel
from app.networks.base_network import ModelKind, TrainedMemory
from app.networks.correlation import train_qrcnn
from app.networks.hopfield import train_hebbian, train_projection
from app.networks.memory_set import FundamentalMemorySet
from app.networks.projection import train_qrpnn


MODEL_NAMES: tuple[str, ...] = (
    ModelKind.QHNN_HEBBIAN.value,
    ModelKind.QHNN_PROJECTION.value,
    *(f"{ModelKind.QRCNN.value}-{k}" for k in KERNEL_NAMES),
    *(f"{ModelKind.QRPNN.value}-{k}" for k in KERNEL_NAMES),
)

# kernel name → parameter names it takes from the experiment level
KERNEL_PARAMETERS: dict[str, tuple[str, ...]] = {
    "identity": (),
    "high-order": ("q",),
    "potential": ("L", "eps_p"),
    "exponential": ("alpha",),
}


@dataclass(frozen=True)
class ModelSpec:
    """A parsed model name: family plus (for QRCNN / QRPNN) kernel name."""

    kind: ModelKind
    kernel: str | None = None

    @classmethod
    def parse(cls, name: str) -> "ModelSpec":
        """
        Raises
        ------
        ValueError — unknown model name
        """
        if name not in MODEL_NAMES:
            raise ValueError(f"Unknown model '{name}'. Choose from: {', '.join(MODEL_NAMES)}")
        for kind in (ModelKind.QHNN_HEBBIAN, ModelKind.QHNN_PROJECTION):
            if name == kind.value:
                return cls(kind)
        family, kernel = name.split("-", 1)
        return cls(ModelKind(family), kernel)

    @property
    def name(self) -> str:
        return self.kind.value if self.kernel is None else f"{self.kind.value}-{self.kernel}"

    def make_kernel(self, params: Mapping[str, float]) -> BaseKernel | None:
        if self.kernel is None:
            return None
        wanted = {key: params[key] for key in KERNEL_PARAMETERS[self.kernel] if key in params}
        return make_kernel(self.kernel, **wanted)

    def describe_params(self, params: Mapping[str, float]) -> str:
        kernel = self.make_kernel(params)
        return "" if kernel is None else kernel.describe()


def build_model(
    spec: ModelSpec | str,
    memories: FundamentalMemorySet,
    kernel_params: Mapping[str, float] | None = None,
) -> TrainedMemory:
    """
    Train the named model on `memories`.

    Raises
    ------
    SingularMatrix — projection-type training on a degenerate memory set
    KernelOverflow — QRPNN whose kernel overflows at f(1)
    """
    if isinstance(spec, str):
        spec = ModelSpec.parse(spec)
    params = dict(kernel_params or {})

    if spec.kind is ModelKind.QHNN_HEBBIAN:
        return train_hebbian(memories)
    if spec.kind is ModelKind.QHNN_PROJECTION:
        return train_projection(memories)

    kernel = spec.make_kernel(params)
    if spec.kind is ModelKind.QRCNN:
        return train_qrcnn(memories, kernel)
    return train_qrpnn(memories, kernel)
