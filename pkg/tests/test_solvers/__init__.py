"""Test solvers"""
