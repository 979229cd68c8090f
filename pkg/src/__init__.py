"""Threshold-function protocols and tree-like Cutting Planes lower-bound toolkit."""
