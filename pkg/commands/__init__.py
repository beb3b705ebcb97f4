"""Click commands, one module per command; registered on the group in app.py."""
