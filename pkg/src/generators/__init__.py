"""Report rendering: text, JSON and spreadsheets."""
