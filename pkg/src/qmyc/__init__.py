"""Quantum graphs, quantum Mycielskians, twins and distinguishing numbers."""
