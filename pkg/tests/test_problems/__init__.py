"""Test problems package"""
