"""
Excel export of verification reports and tables.

Generates a workbook with:
- Sheet 1: Summary with pass/fail/skip counts per suite
- One sheet per suite listing every check with its witness
- One sheet per table a suite produced (KL coefficients, block ranks, tau words)
"""

import io

from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

from src.calculators.verification import VerificationResult

# Style constants
HEADER_FILL = PatternFill(start_color="1F4E79", end_color="1F4E79", fill_type="solid")
HEADER_FONT = Font(color="FFFFFF", bold=True)
POSITIVE_FILL = PatternFill(start_color="C6EFCE", end_color="C6EFCE", fill_type="solid")
NEGATIVE_FILL = PatternFill(start_color="FFC7CE", end_color="FFC7CE", fill_type="solid")
THIN_BORDER = Border(
    left=Side(style='thin'),
    right=Side(style='thin'),
    top=Side(style='thin'),
    bottom=Side(style='thin')
)

# Excel caps sheet titles at 31 characters
MAX_TITLE = 31


def _apply_header_style(cell):
    """Apply header styling to a cell."""
    cell.fill = HEADER_FILL
    cell.font = HEADER_FONT
    cell.alignment = Alignment(horizontal="center", vertical="center")
    cell.border = THIN_BORDER


def _sheet_title(wb: Workbook, base: str) -> str:
    base = base.replace("/", "-")
    title = base[:MAX_TITLE]
    k = 2
    while title in wb.sheetnames:
        suffix = f" ({k})"
        title = base[:MAX_TITLE - len(suffix)] + suffix
        k += 1
    return title


def generate_excel_report(results: list[VerificationResult]) -> io.BytesIO:
    """
    Generate an Excel workbook for one or more verification results.

    Args:
        results: Suite results, in the order they should appear

    Returns:
        BytesIO buffer containing the Excel file
    """
    wb = Workbook()

    # Remove default sheet
    wb.remove(wb.active)

    _create_summary_sheet(wb, results)
    for result in results:
        _create_verification_sheet(wb, result)
        for name, rows in result.tables.items():
            _create_table_sheet(wb, f"{result.suite} {name}", rows)

    # Save to buffer
    buffer = io.BytesIO()
    wb.save(buffer)
    buffer.seek(0)

    return buffer


def generate_table_workbook(title: str, rows: list[list[str]]) -> io.BytesIO:
    """A single-sheet workbook; the first row is the header."""
    wb = Workbook()
    wb.remove(wb.active)
    _create_table_sheet(wb, title, rows)
    buffer = io.BytesIO()
    wb.save(buffer)
    buffer.seek(0)
    return buffer


def _create_summary_sheet(wb: Workbook, results: list[VerificationResult]):
    ws = wb.create_sheet("Summary")
    headers = ["Suite", "Parameters", "Passed", "Failed", "Skipped", "Result"]
    for col, header in enumerate(headers, 1):
        _apply_header_style(ws.cell(row=1, column=col, value=header))

    for row, result in enumerate(results, 2):
        params = ", ".join(f"{k}={v}" for k, v in result.parameters.items())
        values = [result.suite, params, result.pass_count, result.fail_count, result.skip_count]
        for col, value in enumerate(values, 1):
            ws.cell(row=row, column=col, value=value).border = THIN_BORDER
        cell = ws.cell(row=row, column=6, value="PASS" if result.passed else "FAIL")
        cell.border = THIN_BORDER
        cell.fill = POSITIVE_FILL if result.passed else NEGATIVE_FILL
        cell.font = Font(color="006100" if result.passed else "9C0006", bold=True)

    for col, width in zip("ABCDEF", (20, 50, 10, 10, 10, 10)):
        ws.column_dimensions[col].width = width


def _create_verification_sheet(wb: Workbook, verification: VerificationResult):
    """Create the sheet showing all checks of one suite with pass/fail."""
    ws = wb.create_sheet(_sheet_title(wb, verification.suite))

    # Summary at top
    ws.cell(row=1, column=1, value=f"{verification.suite} verification")
    ws.cell(row=1, column=1).font = Font(bold=True, size=12, color="1F4E79")

    ws.cell(row=2, column=1, value=f"Passed: {verification.pass_count}")
    ws.cell(row=2, column=1).font = Font(color="006100")
    ws.cell(row=2, column=2, value=f"Failed: {verification.fail_count}")
    ws.cell(row=2, column=2).font = Font(color="9C0006")
    ws.cell(row=2, column=3, value=f"Skipped: {verification.skip_count}")
    ws.cell(row=2, column=3).font = Font(color="808080")

    headers = ["Check", "Description", "Formula", "Result", "Witness"]
    for col, header in enumerate(headers, 1):
        _apply_header_style(ws.cell(row=4, column=col, value=header))

    for idx, check in enumerate(verification.checks, 5):
        ws.cell(row=idx, column=1, value=check.check_id)
        ws.cell(row=idx, column=2, value=check.description)
        ws.cell(row=idx, column=3, value=check.formula)

        result_text = "SKIP" if check.skipped else ("PASS" if check.passed else "FAIL")
        result_cell = ws.cell(row=idx, column=4, value=result_text)
        if check.skipped:
            result_cell.font = Font(color="808080")
        elif check.passed:
            result_cell.font = Font(color="006100", bold=True)
            result_cell.fill = POSITIVE_FILL
        else:
            result_cell.font = Font(color="9C0006", bold=True)
            result_cell.fill = NEGATIVE_FILL

        ws.cell(row=idx, column=5, value=check.witness)
        for col in range(1, 6):
            ws.cell(row=idx, column=col).border = THIN_BORDER

    for col, width in zip("ABCDE", (28, 40, 50, 10, 60)):
        ws.column_dimensions[col].width = width


def _create_table_sheet(wb: Workbook, title: str, rows: list[list[str]]):
    ws = wb.create_sheet(_sheet_title(wb, title))
    if not rows:
        return
    header, body = rows[0], rows[1:]
    for col, value in enumerate(header, 1):
        _apply_header_style(ws.cell(row=1, column=col, value=value))
    for row, values in enumerate(body, 2):
        for col, value in enumerate(values, 1):
            cell = ws.cell(row=row, column=col, value=value)
            cell.border = THIN_BORDER
    for col in range(1, len(header) + 1):
        ws.column_dimensions[get_column_letter(col)].width = 20
