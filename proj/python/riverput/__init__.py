from ._riverput import *  # noqa: F401,F403
from ._riverput import __version__  # noqa: F401
