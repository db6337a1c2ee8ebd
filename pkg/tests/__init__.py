"""origami-veech Test Suite"""
