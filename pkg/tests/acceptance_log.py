"""Pass/fail lines collected by the acceptance tests and printed at the end of the run."""

LINES = []
