from .writers import render, render_csv, render_plain, write_output, write_reports
