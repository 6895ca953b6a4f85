import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="exactriemann",
    version="0.1.0",
    author="exactriemann developers",
    description="Exact iterative and approximate Riemann solvers for the shallow water and Euler equations",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Physics",
        "Development Status :: 3 - Alpha"
    ],
    install_requires=["numpy", "scipy", "texttable"],
    extras_require={"test": ["pytest", "mock", "hypothesis"]},
    entry_points={"console_scripts": ["exactriemann=exactriemann.cli:main"]},
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    python_requires='>=3.7',
)
