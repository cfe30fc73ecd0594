"""Exact z-class counting in GL_n and U_n over small finite fields.

Two independent routes to the same numbers: closed-form / generating-function
counts on one side, brute-force enumeration of the actual matrix groups on the
other.  Each is used to check the other.
"""

__version__ = "1.0.0"
