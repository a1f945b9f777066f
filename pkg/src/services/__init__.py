"""
Case studies.

Each module runs one worked example end to end and returns a pydantic report that the CLI
renders or checks.
"""
