from setuptools import find_packages, setup

setup(
    name="chebkit",
    version="0.3.0",
    description="Chebotarev least prime constants, recomputed and certified",
    author="LeOndaz",
    author_email="ahmeddark369@gmail.com",
    packages=find_packages(include=["chebkit", "chebkit.*"]),
    install_requires=["numpy>=1.24", "scipy>=1.10"],
    extras_require={"csv": ["polars>=0.20.2"]},
    entry_points={"console_scripts": ["chebkit = chebkit.cli:main"]},
    platforms=["*"],
    license="MIT",
)
