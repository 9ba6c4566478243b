"""Exact dense-matrix reference computations for codes on few qubits."""
