"""Coend-element calculus for Hopf algebras in braided module categories."""
