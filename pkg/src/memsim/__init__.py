"""memsim: mem-device models, series-device logic gates, and crossbar classifiers."""

from memsim.devices import (
    BiolekDevice,
    BiolekParams,
    BiolekState,
    MohamedDevice,
    MohamedParams,
    MohamedState,
    MemristorParams,
    MemristorState,
    ThresholdMemristor,
    CALIBRATION_TARGETS,
    get_device,
    registered_models,
)

__version__ = "0.1.0"
