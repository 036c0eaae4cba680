"""Test analytic oracles"""
