from wlattice.reference import *  # noqa: F401,F403
