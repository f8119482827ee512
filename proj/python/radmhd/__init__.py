from ._radmhd import *  # noqa: F401,F403
