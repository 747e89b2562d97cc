"""pdmchannel - exact operator algebra and spectral checks for PDM channel models."""

__version__ = "0.1.0"

import structlog

log = structlog.get_logger(__name__)
